"""Group words: parsing, printing and evaluation.

Grammar (lowest precedence first)::

    word    = postfix { ["*"] postfix } ;            (* left associative *)
    postfix = primary { "^" ( "-1" | primary ) } ;  (* x^y^z = (x^y)^z *)
    primary = ident
            | "(" word ")"
            | "[" word "," [ "_" digits ] word "]" ;
    ident   = letter { letter | digit | "_" | "'" } ;

``x^-1`` is the inverse, ``x^y`` the conjugate ``y^-1 x y``, ``[x, y]`` the
commutator ``x^-1 y^-1 x y`` and ``[x,_n y]`` the left-normed commutator
``[[x,_(n-1) y], y]`` with ``n >= 1``.  Juxtaposition ``x y`` means ``x*y``.

Evaluation works on raw indices, so binding variables to numpy index arrays
evaluates the word on many assignments at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

import numpy as np

from .errors import GroupMismatch, UnboundVariable, WordSyntaxError
from .groups import FiniteGroup, GroupElement


@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self):
        if not self.name or not self.name[0].isalpha():
            raise ValueError(f"bad variable name {self.name!r}")


@dataclass(frozen=True)
class Mul:
    left: "WordExpr"
    right: "WordExpr"


@dataclass(frozen=True)
class Inv:
    operand: "WordExpr"


@dataclass(frozen=True)
class Conj:
    base: "WordExpr"
    by: "WordExpr"


@dataclass(frozen=True)
class EngelComm:
    left: "WordExpr"
    right: "WordExpr"
    depth: int = 1

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError("commutator depth must be at least 1")


WordExpr = Union[Var, Mul, Inv, Conj, EngelComm]
Binding = Mapping[str, GroupElement]


# --------------------------------------------------------------------------
# parsing


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, expected: str):
        raise WordSyntaxError(self.pos, expected, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(repr(ch))
        self.pos += 1

    def parse(self) -> WordExpr:
        if not self.text.strip():
            self.error("a word")
        node = self.word()
        if self.peek():
            self.error("end of input")
        return node

    def word(self) -> WordExpr:
        node = self.postfix()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                node = Mul(node, self.postfix())
            elif ch and (ch.isalpha() or ch in "(["):
                node = Mul(node, self.postfix())
            else:
                return node

    def postfix(self) -> WordExpr:
        node = self.primary()
        while self.peek() == "^":
            self.pos += 1
            if self.peek() == "-":
                self.pos += 1
                if self.peek() != "1":
                    self.error("'1' after '^-'")
                self.pos += 1
                if self.pos < len(self.text) and self.text[self.pos].isdigit():
                    self.error("'^-1' (only inverse is supported)")
                node = Inv(node)
            else:
                node = Conj(node, self.primary())
        return node

    def primary(self) -> WordExpr:
        ch = self.peek()
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.text) and (self.text[self.pos].isalnum()
                                                 or self.text[self.pos] in "_'"):
                self.pos += 1
            return Var(self.text[start:self.pos])
        if ch == "(":
            self.pos += 1
            node = self.word()
            self.expect(")")
            return node
        if ch == "[":
            self.pos += 1
            left = self.word()
            self.expect(",")
            depth = 1
            if self.peek() == "_":
                self.pos += 1
                start = self.pos
                while self.pos < len(self.text) and self.text[self.pos].isdigit():
                    self.pos += 1
                if start == self.pos:
                    self.error("digits after '_'")
                depth = int(self.text[start:self.pos])
                if depth < 1:
                    self.pos = start
                    self.error("commutator depth >= 1")
            right = self.word()
            self.expect("]")
            return EngelComm(left, right, depth)
        self.error("identifier, '(' or '['")


def parse_word(text: str) -> WordExpr:
    return _Parser(text).parse()


# --------------------------------------------------------------------------
# printing


def _postfix_operand(w: WordExpr) -> str:
    return f"({format_word(w)})" if isinstance(w, Mul) else format_word(w)


def _primary(w: WordExpr) -> str:
    return format_word(w) if isinstance(w, (Var, EngelComm)) else f"({format_word(w)})"


def format_word(w: WordExpr) -> str:
    """Canonical text; ``parse_word(format_word(w)) == w``."""
    if isinstance(w, Var):
        return w.name
    if isinstance(w, Mul):
        right = format_word(w.right)
        if isinstance(w.right, Mul):
            right = f"({right})"
        return f"{format_word(w.left)}*{right}"
    if isinstance(w, Inv):
        return f"{_postfix_operand(w.operand)}^-1"
    if isinstance(w, Conj):
        return f"{_postfix_operand(w.base)}^{_primary(w.by)}"
    if isinstance(w, EngelComm):
        sep = ", " if w.depth == 1 else f",_{w.depth} "
        return f"[{format_word(w.left)}{sep}{format_word(w.right)}]"
    raise TypeError(f"not a word node: {w!r}")


def variables(w: WordExpr) -> list[str]:
    """Variable names in order of first appearance."""
    out: list[str] = []
    stack = [w]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            if node.name not in out:
                out.append(node.name)
        elif isinstance(node, Inv):
            stack.append(node.operand)
        elif isinstance(node, Conj):
            stack.extend((node.by, node.base))
        else:
            stack.extend((node.right, node.left))
    return out


# --------------------------------------------------------------------------
# evaluation


def eval_indices(w: WordExpr, group: FiniteGroup, env: Mapping[str, object]):
    """Evaluate on raw indices; values may be ints or broadcastable index arrays."""
    if isinstance(w, Var):
        try:
            return env[w.name]
        except KeyError:
            raise UnboundVariable(w.name) from None
    if isinstance(w, Mul):
        return group.table[eval_indices(w.left, group, env), eval_indices(w.right, group, env)]
    if isinstance(w, Inv):
        return group.inverses[eval_indices(w.operand, group, env)]
    if isinstance(w, Conj):
        return group.conjugate(eval_indices(w.base, group, env), eval_indices(w.by, group, env))
    if isinstance(w, EngelComm):
        cur = eval_indices(w.left, group, env)
        right = eval_indices(w.right, group, env)
        for _ in range(w.depth):
            cur = group.commutator(cur, right)
        return cur
    raise TypeError(f"not a word node: {w!r}")


def eval_word(w: WordExpr | str, env: Binding, group: FiniteGroup | None = None) -> GroupElement:
    """Value of ``w`` with each variable replaced by its bound element."""
    if isinstance(w, str):
        w = parse_word(w)
    for name in variables(w):
        if name not in env:
            raise UnboundVariable(name)
    groups = {id(e.group): e.group for e in env.values()}
    if group is not None:
        groups.setdefault(id(group), group)
    if len(groups) > 1:
        raise GroupMismatch("bound elements belong to different groups")
    if not groups:
        raise UnboundVariable(variables(w)[0] if variables(w) else "?")
    (grp,) = groups.values()
    value = eval_indices(w, grp, {k: v.index for k, v in env.items()})
    return GroupElement(grp, int(value))


def engel_indices(group: FiniteGroup, x, g, n: int):
    """``[x,_n g]`` on raw indices, computed iteratively; ``n = 0`` returns ``x``."""
    cur = x
    for _ in range(n):
        cur = group.commutator(cur, g)
    return cur


def engel_word(x: GroupElement, g: GroupElement, n: int) -> GroupElement:
    if x.group is not g.group:
        raise GroupMismatch()
    if n < 1:
        raise ValueError("Engel depth must be at least 1")
    return GroupElement(x.group, int(engel_indices(x.group, x.index, g.index, n)))


def commutator(a: GroupElement, b: GroupElement) -> GroupElement:
    return engel_word(a, b, 1)


def project_binding(product: FiniteGroup, env: Mapping[str, object]):
    """Split product-group indices into left and right factor indices."""
    m = product.factors[1].order
    left = {k: np.asarray(v) // m for k, v in env.items()}
    right = {k: np.asarray(v) % m for k, v in env.items()}
    return left, right
