"""Program-to-program constructors.

The central one is the diagonal builder: given the index j of a total
function whose outputs are themselves indices of total functions, it
constructs the index of a program computing n |-> run(run(j, n), n) + 1.
That value escapes the range of the function at j, which is what the
workbench exists to demonstrate at desk scale.

Scratch registers r1-r3 are fixed and disjoint from the input/output
register r0, so the templates never collide with the caller's data.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpz

from .lang import Copy, Dec, Eval, Inc, Program, SetConst, While
from .numbering import encode_program


@dataclass(frozen=True)
class DiagonalProgram:
    source_enumerator: int  # the j the builder was applied to
    program: Program
    index: int


_psi_cache: dict[int, DiagonalProgram] = {}


def build_psi(j: int) -> DiagonalProgram:
    """Index of the diagonal program for j.

    Template: m := run(j, n); v := run(m, n); output v + 1.
    Construction is total; the semantic guarantee (result is total,
    and escapes range of the function at j) holds when j is a certified
    enumerator — enforcement lives in the certificate layer.
    """
    key = mpz(j)
    hit = _psi_cache.get(key)
    if hit is not None:
        return hit
    program = Program((
        SetConst(1, key),
        Eval(2, 1, 0),
        Eval(3, 2, 0),
        Inc(3),
        Copy(0, 3),
    ))
    built = DiagonalProgram(key, program, encode_program(program))
    _psi_cache[key] = built
    return built


def psi(j: int) -> int:
    return build_psi(j).index


def clear_psi_cache() -> None:
    """Cached constructor outputs can reach gigabytes; drop them between runs."""
    _psi_cache.clear()
    prepend_value.cache_clear()
    const_program.cache_clear()
    compose.cache_clear()


def prepend_program(j: int, v: int) -> Program:
    """The program behind prepend_value, before encoding."""
    return Program((
        Copy(1, 0),
        SetConst(0, mpz(v)),
        While(1, (
            Dec(1),
            SetConst(2, mpz(j)),
            Eval(0, 2, 1),
            SetConst(1, 0),
        )),
    ))


@lru_cache(maxsize=64)
def prepend_value(j: int, v: int) -> int:
    """Index of g with g(0) = v and g(n) = run(j, n-1) for n >= 1."""
    return encode_program(prepend_program(j, v))


@lru_cache(maxsize=64)
def const_program(t: int) -> int:
    """Index of the program computing the constant function n |-> t."""
    return encode_program(Program((SetConst(0, mpz(t)),)))


@lru_cache(maxsize=64)
def compose(a: int, b: int) -> int:
    """Index of a program computing n |-> run(a, run(b, n))."""
    program = Program((
        SetConst(1, mpz(b)),
        Eval(2, 1, 0),
        SetConst(1, mpz(a)),
        Eval(0, 1, 2),
    ))
    return encode_program(program)


def identity_index() -> int:
    """The empty program: input passes through untouched. Index 0."""
    return 0
