"""On-disk cache for computed edge spectra.

Entries are keyed by the vertex count, the canonical forms of the
forbidden minors and the engine version, so a cache survives relabelled
but isomorphic queries and is invalidated by engine changes.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from .canon import canonical_form
from .graph6 import graph6_decode, read_graph6_file, write_graph6_file
from .minor import ForbiddenSet
from .version import ENGINE_VERSION

ENV_VAR = "MINORGAP_CACHE_DIR"


def default_cache_dir() -> Path | None:
    path = os.environ.get(ENV_VAR)
    return Path(path) if path else None


class SpectrumCache:
    def __init__(self, root: str | Path):
        self.root = Path(root)

    def _key(self, n: int, f: ForbiddenSet) -> str:
        forms = sorted(canonical_form(h) for h in f)
        blob = repr((ENGINE_VERSION, n, forms)).encode("ascii")
        return hashlib.sha256(blob).hexdigest()[:24]

    def load(self, n: int, f: ForbiddenSet):
        from .spectrum import EdgeSpectrum

        entry = self.root / self._key(n, f)
        path = entry / "spectrum.json"
        if not path.is_file():
            return None
        try:
            obj = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        forbidden = ForbiddenSet(
            graph6_decode(s) for s in obj["forbidden"]
        )
        return EdgeSpectrum(
            n=obj["n"],
            forbidden=forbidden,
            spectrum=tuple(obj["spectrum"]),
            m_plus=obj["m_plus"],
            m_minus=obj["m_minus"],
            gap=obj["gap"],
            witnesses={int(k): v for k, v in obj["witnesses"].items()},
        )

    def store(self, result) -> None:
        entry = self.root / self._key(result.n, result.forbidden)
        entry.mkdir(parents=True, exist_ok=True)
        (entry / "spectrum.json").write_text(
            json.dumps(result.to_json_obj(), indent=2, sort_keys=True) + "\n"
        )
        write_graph6_file(
            entry / "witnesses.g6",
            [graph6_decode(result.witnesses[e]) for e in sorted(result.witnesses)],
        )

    def load_witnesses(self, n: int, f: ForbiddenSet):
        path = self.root / self._key(n, f) / "witnesses.g6"
        if not path.is_file():
            return None
        return read_graph6_file(path)
