"""JSON documents: mask files, regularity reports and tables.

Rationals always cross this boundary as strings (``"3/8"``, ``"-5"``);
floats are written with Python's shortest round-trip repr.
"""

from __future__ import annotations

import hashlib
import json
from datetime import datetime, timezone
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional

from . import __version__
from .errors import InputError
from .laurent import LaurentPoly, SymmetricMask
from .regularity import RationalMatrix, RegularityReport, RhoEnclosure
from .trig import Positivity, PositivityVerdict, SPoly


def q2s(x: Fraction) -> str:
    return str(Fraction(x))


def s2q(text) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse rational {text!r}") from exc


def parse_coeffs(text: str):
    parts = [t for t in text.replace(" ", "").split(",")]
    if not parts or parts == [""]:
        raise InputError("empty coefficient list")
    return [s2q(t) for t in parts]


def mask_from_dict(doc: Dict[str, Any]) -> LaurentPoly:
    if not isinstance(doc, dict) or "coeffs" not in doc:
        raise InputError("mask document needs a 'coeffs' array")
    coeffs = doc["coeffs"]
    if not isinstance(coeffs, list) or not coeffs:
        raise InputError("mask 'coeffs' must be a non-empty array")
    offset = doc.get("offset", 0)
    if not isinstance(offset, int):
        raise InputError("mask 'offset' must be an integer")
    poly = LaurentPoly([s2q(c) for c in coeffs], offset)
    if poly.is_zero():
        raise InputError("mask is identically zero")
    return poly


def load_mask_file(path) -> LaurentPoly:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read mask file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"mask file {path} is not valid JSON: {exc}") from exc
    return mask_from_dict(doc)


def laurent_to_dict(p: LaurentPoly) -> Dict[str, Any]:
    return {"offset": p.low, "coeffs": [q2s(c) for c in p.coeffs]}


def symbol_hash(p: LaurentPoly) -> str:
    canon = json.dumps(laurent_to_dict(p), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()


def provenance(input_desc: str, symbol: Optional[LaurentPoly] = None) -> Dict[str, Any]:
    out = {
        "tool": "subdreg",
        "version": __version__,
        "input": input_desc,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }
    if symbol is not None:
        out["input_sha256"] = symbol_hash(symbol)
    return out


def report_to_dict(rep: RegularityReport) -> Dict[str, Any]:
    witness = rep.positivity.witness
    return {
        "symbol": laurent_to_dict(rep.symbol),
        "multiplicity": rep.multiplicity,
        "r": rep.r,
        "p": rep.p,
        "mask_half": [q2s(c) for c in rep.mask.half],
        "s_poly": [q2s(c) for c in rep.s_poly.coeffs],
        "positivity": {
            "kind": rep.positivity.kind.value,
            "witness": None if witness is None else [q2s(witness[0]), q2s(witness[1])],
        },
        "matrix": None if rep.matrix is None else [[q2s(x) for x in row] for row in rep.matrix.entries],
        "rho": {
            "estimate": rep.rho.estimate,
            "radius_bound": rep.rho.radius_bound,
            "charpoly": [q2s(c) for c in rep.rho.charpoly],
        },
        "gamma": rep.gamma,
        "optimal": rep.optimal,
        "integer_exponent_caveat": rep.integer_exponent_caveat,
        "notes": list(rep.notes),
    }


def report_from_dict(doc: Dict[str, Any]) -> RegularityReport:
    pos = doc["positivity"]
    witness = None if pos["witness"] is None else (s2q(pos["witness"][0]), s2q(pos["witness"][1]))
    rho = doc["rho"]
    return RegularityReport(
        symbol=mask_from_dict(doc["symbol"]),
        multiplicity=doc["multiplicity"],
        r=doc["r"],
        mask=SymmetricMask([s2q(c) for c in doc["mask_half"]]),
        s_poly=SPoly([s2q(c) for c in doc["s_poly"]]),
        positivity=PositivityVerdict(Positivity(pos["kind"]), witness),
        matrix=None if doc["matrix"] is None else RationalMatrix(
            tuple(tuple(s2q(x) for x in row) for row in doc["matrix"])
        ),
        rho=RhoEnclosure(rho["estimate"], rho["radius_bound"], tuple(s2q(c) for c in rho["charpoly"])),
        gamma=doc["gamma"],
        optimal=doc["optimal"],
        integer_exponent_caveat=doc["integer_exponent_caveat"],
        notes=list(doc["notes"]),
    )


def format_gamma(gamma: Optional[float], integer_exact: bool = False) -> str:
    """Five decimals, round-half-even; exact integers without decimals."""
    if gamma is None:
        return "n/a"
    if integer_exact and abs(gamma - round(gamma)) < 5e-6:
        return str(int(round(gamma)))
    return str(Decimal(repr(gamma)).quantize(Decimal("0.00001"), rounding=ROUND_HALF_EVEN))


def table_to_dict(kind: str, m_max: int, reports) -> Dict[str, Any]:
    entries = []
    for (m, l), rep in reports.items():
        entries.append(
            {
                "m": m,
                "l": l,
                "gamma": rep.gamma,
                "formatted": format_gamma(rep.gamma, rep.integer_exponent_caveat),
                "rho": rep.rho.estimate,
                "rho_radius": rep.rho.radius_bound,
                "optimal": rep.optimal,
                "integer_exponent_caveat": rep.integer_exponent_caveat,
            }
        )
    return {"kind": kind, "m_max": m_max, "entries": entries}


def dumps(doc) -> str:
    return json.dumps(doc, indent=2)
