__version__ = "0.1.0"

# bump on any change that can alter enumeration or spectrum output;
# cached results from older engines are then ignored
ENGINE_VERSION = 1
