"""House of Graphs retrieval with an on-disk graph6 cache.

The endpoint base comes from ``HOG_BASE_URL`` and the cache directory from
``CHROMATICA_CACHE`` unless given explicitly. Network access goes through a
``transport(url) -> (status, body)`` callable so it can be replaced in tests.
"""

from __future__ import annotations

import json
import os
import tempfile
import urllib.error
import urllib.request
from pathlib import Path
from typing import Callable

from ..errors import HttpError, NotCachedError, ParseError, UnknownGraphError
from .document import GraphDocument
from .graph6 import parse_graph6

DEFAULT_BASE_URL = "https://houseofgraphs.org/api"
DEFAULT_CACHE = Path.home() / ".cache" / "chromatica"

Transport = Callable[[str], "tuple[int, bytes]"]


def urllib_transport(url: str, timeout: float = 30.0) -> tuple[int, bytes]:
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            return resp.status, resp.read()
    except urllib.error.HTTPError as exc:
        return exc.code, b""
    except (urllib.error.URLError, OSError) as exc:
        raise HttpError(url, None, str(exc)) from exc


def base_url() -> str:
    return os.environ.get("HOG_BASE_URL", DEFAULT_BASE_URL).rstrip("/")


def cache_dir(explicit: str | os.PathLike | None = None) -> Path:
    if explicit is not None:
        return Path(explicit)
    return Path(os.environ.get("CHROMATICA_CACHE", DEFAULT_CACHE))


def cache_path(hog_id: int, directory: str | os.PathLike | None = None) -> Path:
    return cache_dir(directory) / f"hog-{hog_id}.g6"


def extract_graph6(body: bytes) -> bytes:
    """Accept either a bare graph6 line or a JSON object with a ``graph6``/``g6`` field."""
    text = body.strip()
    if text.startswith(b"{"):
        try:
            data = json.loads(text)
        except ValueError:
            raise ParseError("House of Graphs returned malformed JSON") from None
        for key in ("graph6", "g6", "canonical_form"):
            if isinstance(data.get(key), str):
                return data[key].strip().encode("ascii", "replace")
        raise ParseError("House of Graphs response carries no graph6 field")
    return text.splitlines()[0] if text else b""


def _atomic_write(path: Path, payload: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(payload)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def hog_fetch(
    hog_id: int,
    cache_dir: str | os.PathLike | None = None,
    offline: bool = False,
    transport: Transport | None = None,
) -> GraphDocument:
    """Graph ``hog_id`` from the cache if present, otherwise from the network.

    ``metadata["cached"]`` tells which path served the request.
    """
    if hog_id < 1:
        raise ValueError(f"House of Graphs ids are positive, got {hog_id}")
    path = cache_path(hog_id, cache_dir)
    meta = {"name": f"HoG {hog_id}", "source": "hog", "hog_id": hog_id}
    if path.exists():
        g = parse_graph6(path.read_bytes())
        return GraphDocument(g, metadata={**meta, "cached": True})
    if offline:
        raise NotCachedError(hog_id, str(path))
    url = f"{base_url()}/graphs/{hog_id}"
    status, body = (transport or urllib_transport)(url)
    if status == 404:
        raise UnknownGraphError(hog_id)
    if status != 200:
        raise HttpError(url, status)
    payload = extract_graph6(body)
    g = parse_graph6(payload)
    _atomic_write(path, payload + b"\n")
    return GraphDocument(g, metadata={**meta, "cached": False})
