"""Export and reporting: JSON codecs and tabular reports."""
import json
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Union

import numpy as np
import pandas as pd
from pydantic import ValidationError

from errors import InputFormatError, PreconditionError
from models import ActionModel, OrbitRowModel, SymFuncModel
from partitions import Partition
from setaction import FiniteAction, OrbitReport
from symfunc import Basis, SymFunc
import logging

logger = logging.getLogger(__name__)


def format_coefficient(value: Union[int, Fraction]) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def dumps(payload) -> str:
    """Canonical JSON text: insertion-ordered keys, compact separators."""
    return json.dumps(payload, separators=(",", ":"))


def _load(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(f"invalid {what} JSON at line {e.lineno} column {e.colno} (char {e.pos}): {e.msg}")
    except RecursionError:
        raise InputFormatError(f"invalid {what} JSON: nesting too deep")


def _first_error(error: ValidationError) -> str:
    first = error.errors()[0]
    where = ".".join(str(part) for part in first.get("loc", ())) or "<root>"
    return f"{where}: {first.get('msg')}"


class ExportReporter:
    """Encode and decode the toolkit's JSON formats and build report tables."""

    @staticmethod
    def symfunc_to_dict(f: SymFunc) -> Dict:
        return {
            "basis": f.basis.value,
            "degree": f.degree,
            "terms": [
                {"partition": lam.to_json(), "coeff": format_coefficient(c)} for lam, c in f.items()
            ],
        }

    @classmethod
    def symfunc_to_json(cls, f: SymFunc) -> str:
        return dumps(cls.symfunc_to_dict(f))

    @staticmethod
    def symfunc_from_json(text: str) -> SymFunc:
        payload = _load(text, "symmetric function")
        try:
            model = SymFuncModel.model_validate(payload)
        except ValidationError as e:
            raise InputFormatError(f"invalid symmetric function: {_first_error(e)}")
        terms: Dict[Partition, Fraction] = {}
        weights = []
        for term in model.terms:
            lam = Partition.from_parts(term.partition)
            if lam.weight not in weights:
                weights.append(lam.weight)
            terms[lam] = terms.get(lam, Fraction(0)) + Fraction(term.coeff)
        if model.degree not in weights and weights:
            weights.insert(0, model.degree)
        if len(weights) > 1:
            raise PreconditionError(
                f"inhomogeneous symmetric function: terms of weight {weights[0]} and {weights[1]}"
            )
        return SymFunc(Basis.parse(model.basis), terms, model.degree)

    @staticmethod
    def action_to_json(a: FiniteAction) -> str:
        return dumps(a.to_dict())

    @staticmethod
    def action_from_json(text: str, name: str = "custom") -> FiniteAction:
        payload = _load(text, "action")
        try:
            model = ActionModel.model_validate(payload)
        except ValidationError as e:
            raise InputFormatError(f"invalid action: {_first_error(e)}")
        logger.debug(f"read action {name}: n={model.n}, m={model.m}")
        return FiniteAction(model.n, model.m, model.gens, name=name)

    @staticmethod
    def orbit_report_records(report: OrbitReport) -> List[Dict]:
        return [OrbitRowModel(**record).model_dump() for record in report.to_records()]

    @staticmethod
    def table(rows: Iterable[Dict]) -> pd.DataFrame:
        return pd.DataFrame(list(rows))

    @staticmethod
    def table_records(df: pd.DataFrame) -> List[Dict]:
        """Records with every numeric cell as a string, booleans kept."""
        records = []
        for row in df.to_dict(orient="records"):
            records.append({
                key: bool(value) if isinstance(value, (bool, np.bool_))
                else value if isinstance(value, (list, str)) or value is None else str(value)
                for key, value in row.items()
            })
        return records

    @staticmethod
    def summary_text(df: pd.DataFrame, title: Optional[str] = None) -> str:
        lines = []
        if title:
            lines.append(title)
        lines.append(df.to_string(index=False) if len(df) else "(empty)")
        return "\n".join(lines)
