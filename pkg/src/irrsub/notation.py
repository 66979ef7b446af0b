"""Weight strings and factor-list expressions.

Weight strings
    ``100000`` is the weight (1,0,0,0,0,0); components of a product are
    separated by commas (``10,01``).  A component with a coordinate above 9
    or below 0 is written as a parenthesized list, ``(12;0;-1)``; spaces are
    accepted in place of ``;``.  ``λ1+λ5`` (or ``l1+l5``) and ``0`` are
    accepted for a single component.

Factor lists
    ``term / term / ...`` where a term is a ``*``-separated tensor product of
    factors with an optional trailing multiplicity ``^n``.  A factor is a
    label ``0100`` (irreducible), ``W(0100)`` (Weyl module), a product tuple
    ``(10,W(11),00)``, or a parenthesized term; any factor may carry a twist
    ``^[r]``, ``^[r+1]`` or ``^[2]``.  Unicode superscript digits, ``⊗`` and
    ``²`` style multiplicities are normalised on input.
"""

from __future__ import annotations

from dataclasses import dataclass
import re

from .rootsys import GroupShape

__all__ = [
    "parse_weight",
    "parse_component",
    "format_weight",
    "format_component",
    "normalize_expr",
    "parse_factor_list",
    "Node",
]

_SUPER = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")


def _super_to_caret(text: str) -> str:
    return re.sub(r"[⁰¹²³⁴⁵⁶⁷⁸⁹]+", lambda m: "^" + m.group(0).translate(_SUPER), text)


def parse_component(text: str, rank: int) -> tuple:
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        parts = [x for x in re.split(r"[;\s]+", s[1:-1].strip()) if x]
        w = tuple(int(x) for x in parts)
    elif re.fullmatch(r"\d+", s) and len(s) == rank:
        w = tuple(int(c) for c in s)
    elif s == "0":
        w = (0,) * rank
    elif re.fullmatch(r"(\d*[λl]\d+)(\+\d*[λl]\d+)*", s):
        v = [0] * rank
        for m in re.finditer(r"(\d*)[λl](\d+)", s):
            i = int(m.group(2))
            if not 1 <= i <= rank:
                raise ValueError(f"fundamental weight index {i} out of range in {text!r}")
            v[i - 1] += int(m.group(1) or 1)
        w = tuple(v)
    else:
        raise ValueError(f"malformed weight component {text!r} for rank {rank}")
    if len(w) != rank:
        raise ValueError(f"weight {text!r} has {len(w)} coordinates, expected {rank}")
    return w


def _split_top(text: str, sep: str) -> list:
    out, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == sep and depth == 0:
            out.append(text[start:i])
            start = i + 1
    out.append(text[start:])
    return out


def parse_weight(shape: GroupShape, text: str) -> tuple:
    parts = _split_top(text.strip(), ",")
    if len(parts) != len(shape.components):
        raise ValueError(f"weight {text!r} has {len(parts)} components, {shape} has "
                         f"{len(shape.components)}")
    out: list = []
    for part, n in zip(parts, shape.ranks):
        out.extend(parse_component(part, n))
    return tuple(out)


def format_component(w) -> str:
    if all(0 <= x <= 9 for x in w):
        return "".join(str(x) for x in w)
    return "(" + ";".join(str(x) for x in w) + ")"


def format_weight(shape: GroupShape, w) -> str:
    return ",".join(format_component(part) for part in shape.split(tuple(w)))


# ------------------------------------------------------------------ factor lists


def normalize_expr(text: str) -> str:
    s = text.replace("⊗", "*").replace("\\otimes", "*").replace("ι", "iota ")
    s = s.replace("†", "").replace("‡", "")
    s = _super_to_caret(s)
    return re.sub(r"\s+", "", s)


@dataclass(frozen=True)
class Node:
    """Parsed factor-list expression.

    kind is one of ``sum`` (children), ``tensor`` (children), ``tuple``
    (children, one per component), ``weyl`` / ``irr`` (label text); ``twist``
    is a symbolic exponent string such as ``"r"`` or ``"r+1"``; ``mult`` is an
    integer multiplicity.
    """

    kind: str
    children: tuple = ()
    label: str = ""
    twist: str = ""
    mult: int = 1


def _parse_mult_suffix(s: str):
    """Strip trailing ``^n`` / ``^[x]`` suffixes; return (core, twist, mult)."""
    twist, mult = "", 1
    while True:
        m = re.search(r"\^(\d+)$", s)
        if m and _balanced(s[: m.start()]):
            mult *= int(m.group(1))
            s = s[: m.start()]
            continue
        m = re.search(r"\^\[([^\[\]]+)\]$", s)
        if m and _balanced(s[: m.start()]):
            if twist:
                raise ValueError(f"double twist in {s!r}")
            twist = m.group(1)
            s = s[: m.start()]
            continue
        return s, twist, mult


def _balanced(s: str) -> bool:
    d = 0
    for ch in s:
        d += ch in "(["
        d -= ch in ")]"
        if d < 0:
            return False
    return d == 0


def parse_factor_list(text: str, ncomp: int) -> Node:
    s = normalize_expr(text)
    if not s:
        raise ValueError("empty factor list")
    return Node("sum", tuple(_parse_term(t, ncomp) for t in _split_top(s, "/")))


def _parse_term(s: str, ncomp: int) -> Node:
    if not s:
        raise ValueError("empty term in factor list")
    parts = _split_top(s, "*")
    if len(parts) == 1:
        return _parse_factor(s, ncomp)
    # multiplicity on the last factor of an unparenthesized tensor binds to it
    return Node("tensor", tuple(_parse_factor(p, ncomp) for p in parts))


def _parse_factor(s: str, ncomp: int) -> Node:
    core, twist, mult = _parse_mult_suffix(s)
    if core.startswith("W(") and core.endswith(")") and _balanced(core[2:-1]):
        node = Node("weyl", label=core[2:-1])
    elif core.startswith("(") and core.endswith(")") and _balanced(core[1:-1]):
        inner = core[1:-1]
        items = _split_top(inner, ",")
        if len(items) > 1 or (ncomp > 1 and len(items) == ncomp):
            if len(items) != ncomp:
                raise ValueError(f"tuple {s!r} has {len(items)} entries, expected {ncomp}")
            node = Node("tuple", tuple(_parse_component_term(x) for x in items))
        elif re.fullmatch(r"[-\d;]+", inner):
            node = Node("irr", label=core)
        else:
            node = _parse_inner_sum(inner, ncomp)
    elif re.fullmatch(r"[\dλl+]+", core):
        node = Node("irr", label=core)
    else:
        raise ValueError(f"cannot parse factor {s!r}")
    if twist or mult != 1:
        node = Node(node.kind, node.children, node.label,
                    _join_twist(node.twist, twist), node.mult * mult)
    return node


def _join_twist(a: str, b: str) -> str:
    if a and b:
        raise ValueError("nested twists are not supported")
    return a or b


def _parse_inner_sum(inner: str, ncomp: int) -> Node:
    terms = _split_top(inner, "/")
    if len(terms) == 1:
        return _parse_term(inner, ncomp)
    return Node("sum", tuple(_parse_term(t, ncomp) for t in terms))


def _parse_component_term(s: str) -> Node:
    return _parse_term(s, 1)
