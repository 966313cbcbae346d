"""Content digests for graphs and input files."""
import hashlib
import json
from pathlib import Path
from typing import Any, Dict


def payload_digest(payload: Dict[str, Any]) -> str:
    """SHA256 of the canonical JSON encoding of a payload."""
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def file_digest(file_path: Path) -> str:
    """Calculate SHA256 hash of a file."""
    sha256 = hashlib.sha256()

    with open(file_path, "rb") as f:
        while chunk := f.read(8192):
            sha256.update(chunk)

    return sha256.hexdigest()
