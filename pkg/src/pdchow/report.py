"""Machine-readable command reports."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .diffpoly import DiffPoly
from .ranking import Ranking
from .textio import format_monomial, print_poly, sorted_terms

SCHEMA_TAG = "pdchow-report/1"


def load_schema() -> dict:
    return json.loads(resources.files("pdchow").joinpath("data/report.schema.json").read_text())


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def rational(x) -> str:
    return str(Fraction(x))


def poly_json(f: DiffPoly, ranking=None) -> dict:
    ranking = ranking or Ranking(f.ctx, "orderly")
    terms = [{"coeff": rational(c), "monomial": format_monomial(f.ctx, mono, ranking)}
             for mono, c in sorted_terms(f, ranking)]
    return {"text": print_poly(f, ranking), "terms": terms}


def numpoly_json(w) -> dict:
    return {"basis": "binomial", "coeffs": [rational(c) for c in w.coeffs]}


@dataclass
class Report:
    command: str
    source: str
    status: str = "ok"
    message: str = ""
    results: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"schema": SCHEMA_TAG, "command": self.command, "input_sha256": digest(self.source),
                "status": self.status, "message": self.message, "results": self.results}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"
