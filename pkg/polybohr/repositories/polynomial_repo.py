"""
Polynomial repository - JSON files of free and pluriharmonic polynomials
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Union

import numpy as np
from pydantic import ValidationError

from polybohr.core.exceptions import PolynomialFileError
from polybohr.models.polynomial import FreePolynomial, KPluriharmonic
from polybohr.models.words import MultiWord

logger = logging.getLogger(__name__)

Polynomial = Union[FreePolynomial, KPluriharmonic]


def _parse_entry(entry: Any) -> complex:
    if isinstance(entry, (int, float)) and not isinstance(entry, bool):
        return complex(entry)
    if isinstance(entry, list) and len(entry) == 2 and all(isinstance(x, (int, float)) for x in entry):
        return complex(entry[0], entry[1])
    raise PolynomialFileError(f"coefficient entry {entry!r} is neither a number nor [re, im]")


def _parse_coeff(raw: Any, m: int) -> np.ndarray:
    if m == 1:
        # scalar shorthand: 0.5 or [re, im]
        try:
            return np.array([[_parse_entry(raw)]], dtype=np.complex128)
        except PolynomialFileError:
            pass
    if not isinstance(raw, list) or len(raw) != m or any(not isinstance(row, list) or len(row) != m for row in raw):
        raise PolynomialFileError(f"coefficient must be an {m} x {m} array")
    return np.array([[_parse_entry(e) for e in row] for row in raw], dtype=np.complex128)


def _parse_word(raw: Any, n: List[int]) -> MultiWord:
    if not isinstance(raw, list) or any(not isinstance(part, list) for part in raw):
        raise PolynomialFileError(f"word {raw!r} must be a list of letter lists")
    return MultiWord.of(n, raw)


def _dump_coeff(coeff: np.ndarray) -> List[List[List[float]]]:
    return [[[float(z.real), float(z.imag)] for z in row] for row in coeff]


def parse_polynomial(document: Dict[str, Any]) -> Polynomial:
    """
    Build a polynomial from a decoded JSON document

    Args:
        document: {"n": [...], "m": m, "terms": [{"word": [[...]...], "coeff": ...}]},
            with "word2" on every term of a pluriharmonic polynomial

    Returns:
        FreePolynomial or KPluriharmonic
    """
    try:
        n = document["n"]
        m = int(document.get("m", 1))
        raw_terms = document["terms"]
    except (KeyError, TypeError, ValueError) as e:
        raise PolynomialFileError(f"malformed polynomial document: {str(e)}")
    if not isinstance(n, list) or not n or any(not isinstance(x, int) or x < 1 for x in n):
        raise PolynomialFileError("'n' must be a non-empty list of positive integers")
    if not isinstance(raw_terms, list):
        raise PolynomialFileError("'terms' must be a list")

    pluriharmonic = any(isinstance(t, dict) and "word2" in t for t in raw_terms)
    terms: Dict[Any, np.ndarray] = {}
    try:
        for term in raw_terms:
            if not isinstance(term, dict) or "word" not in term or "coeff" not in term:
                raise PolynomialFileError(f"term {term!r} needs 'word' and 'coeff'")
            if pluriharmonic and "word2" not in term:
                raise PolynomialFileError("either every term or no term carries 'word2'")
            word = _parse_word(term["word"], n)
            key = (word, _parse_word(term["word2"], n)) if pluriharmonic else word
            coeff = _parse_coeff(term["coeff"], m)
            terms[key] = terms[key] + coeff if key in terms else coeff
        if pluriharmonic:
            return KPluriharmonic(alphabet_sizes=tuple(n), coefficient_dim=m, terms=terms)
        return FreePolynomial(alphabet_sizes=tuple(n), coefficient_dim=m, terms=terms)
    except (ValidationError, ValueError) as e:
        raise PolynomialFileError(f"invalid polynomial: {str(e)}")


def dump_polynomial(F: Polynomial) -> Dict[str, Any]:
    """The JSON document of a polynomial, terms in sorted word order"""
    items = []
    if isinstance(F, KPluriharmonic):
        for (alpha, beta), coeff in F.terms.items():
            items.append({"word": alpha.to_lists(), "word2": beta.to_lists(), "coeff": _dump_coeff(coeff)})
    else:
        for word, coeff in F.terms.items():
            items.append({"word": word.to_lists(), "coeff": _dump_coeff(coeff)})
    items.sort(key=lambda t: (t["word"], t.get("word2", [])))
    return {"n": list(F.alphabet_sizes), "m": F.coefficient_dim, "terms": items}


def load_polynomial(path: Union[str, Path]) -> Polynomial:
    """
    Load a polynomial file

    Args:
        path: JSON file path

    Returns:
        FreePolynomial or KPluriharmonic

    Raises:
        PolynomialFileError: unreadable file or invalid content
    """
    try:
        document = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        logger.error(f"Error reading polynomial file {path}: {str(e)}")
        raise PolynomialFileError(f"cannot read {path}: {str(e)}")
    F = parse_polynomial(document)
    logger.info(f"Loaded polynomial with {len(F.terms)} terms from {path}")
    return F


def save_polynomial(F: Polynomial, path: Union[str, Path]) -> None:
    """Write a polynomial file"""
    Path(path).write_text(json.dumps(dump_polynomial(F), indent=2) + "\n", encoding="utf-8")
    logger.info(f"Saved polynomial with {len(F.terms)} terms to {path}")
