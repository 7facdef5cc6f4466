"""Label and option validation"""

import logging
from typing import Optional, Tuple

from config import (
    FORBIDDEN_LABEL_CHARS,
    FORBIDDEN_LABEL_SEQUENCES,
    MONOMIAL_SEPARATOR,
    VOID_TOKEN,
)

logger = logging.getLogger(__name__)


def split_pair_label(label: str) -> Optional[Tuple[str, str]]:
    """The halves of ``(left,right)``, split at the comma outside any parentheses

    Halves may be pair labels themselves, so products of products keep
    readable labels. Anything else gives None.

    Example:
        >>> split_pair_label("((1,a),z)")
        ('(1,a)', 'z')
        >>> split_pair_label("(1,a") is None
        True
    """
    if len(label) < 2 or label[0] != "(" or label[-1] != ")":
        return None
    inner = label[1:-1]
    depth = 0
    comma = None
    for i, ch in enumerate(inner):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                return None
        elif ch == "," and depth == 0:
            if comma is not None:
                return None
            comma = i
    if depth or comma is None:
        return None
    return inner[:comma], inner[comma + 1:]


def label_problem(label: str) -> Optional[str]:
    """Why ``label`` is not a valid vertex label, or None when it is

    A label is a non-empty string with no whitespace, none of the characters
    ``{ } ,`` and no ``->``. The bare void token is reserved. Product vertex
    sets use pair labels ``(a,b)`` whose halves are themselves valid labels.

    Example:
        >>> label_problem("r1") is None
        True
        >>> label_problem("((1,a),z)") is None
        True
        >>> label_problem("a b")
        'whitespace in label'
    """
    if not label:
        return "empty label"
    if any(ch.isspace() for ch in label):
        return "whitespace in label"

    halves = split_pair_label(label)
    if halves:
        return label_problem(halves[0]) or label_problem(halves[1])

    if label == VOID_TOKEN:
        return f"'{VOID_TOKEN}' is reserved"
    for ch in FORBIDDEN_LABEL_CHARS:
        if ch in label:
            return f"forbidden character '{ch}'"
    for seq in FORBIDDEN_LABEL_SEQUENCES:
        if seq in label:
            return f"forbidden sequence '{seq}'"
    return None


def ideal_label_problem(label: str) -> Optional[str]:
    """Like ``label_problem``, but also refuses the variable separator of ideal text"""
    problem = label_problem(label)
    if problem is None and MONOMIAL_SEPARATOR in label:
        return f"'{MONOMIAL_SEPARATOR}' separates variables in ideal text"
    return problem


def is_valid_label(label: str) -> bool:
    return label_problem(label) is None


def pair_label(left: str, right: str) -> str:
    """Label of the product vertex ``(left, right)``"""
    return f"({left},{right})"


def parse_seed(raw: Optional[str]) -> Optional[int]:
    """Seed from an environment string; blank or malformed gives None"""
    if raw is None or not raw.strip():
        return None
    try:
        seed = int(raw)
    except ValueError:
        logger.warning(f"Ignoring malformed seed '{raw}'")
        return None
    if seed < 0:
        logger.warning(f"Ignoring negative seed {seed}")
        return None
    return seed
