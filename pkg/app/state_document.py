"""Reading and writing density matrices as JSON state documents."""

from pathlib import Path
from typing import Union

import numpy as np
from pydantic import ValidationError

from app.models import StateDocument
from core.errors import MalformedDocumentError
from core.qmat import DensityMatrix


def serialize_state(rho: DensityMatrix) -> str:
    """JSON document with fields ``dim``, ``re`` and ``im``.

    Floats are written in shortest round-trip form, so parsing returns the
    matrix bit for bit.
    """
    doc = StateDocument(dim=4, re=rho.m.real.tolist(), im=rho.m.imag.tolist())
    return doc.model_dump_json(indent=2) + "\n"


def parse_state(text: Union[str, bytes]) -> DensityMatrix:
    """Parse and validate a state document.

    Raises MalformedDocumentError on syntax or shape problems, then
    HermiticityError, TraceError or PositivityError for invalid matrices.
    """
    try:
        doc = StateDocument.model_validate_json(text)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(part) for part in first["loc"]) or "document"
        raise MalformedDocumentError(
            f"malformed state document at {where}: {first['msg']}"
        ) from exc

    m = np.array(doc.re, dtype=float) + 1j * np.array(doc.im, dtype=float)
    return DensityMatrix(m=m)


def read_state(path: Union[str, Path]) -> DensityMatrix:
    return parse_state(Path(path).read_bytes())


def write_state(path: Union[str, Path], rho: DensityMatrix) -> None:
    Path(path).write_text(serialize_state(rho))
