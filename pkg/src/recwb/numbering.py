"""Bijective numbering of programs: every natural decodes to exactly one
program and every program encodes to exactly one natural.

Layout (normative, bit-exact):
  statement code  s = 6*payload + tag
    tags: Inc=0, Dec=1, While=2, SetConst=3, Eval=4, Copy=5
    payloads: Inc/Dec -> reg; While -> pair(reg, list(body));
              SetConst -> pair(reg, value); Eval -> pair(dst, pair(fn, arg));
              Copy -> pair(dst, src)
  list code: [] -> 0, h:t -> pair(h, list(t)) + 1
  program index = list code of its statement codes

pair is the Cantor pairing pair(a, b) = (a+b)(a+b+1)/2 + b.

Indices of even small programs exceed machine words fast; all arithmetic
goes through gmpy2 so multi-megabit indices stay tractable.
"""

from __future__ import annotations

from functools import lru_cache

import gmpy2
from gmpy2 import mpz

from .lang import Copy, Dec, Eval, Inc, Program, SetConst, Statement, While

_TAG_INC = 0
_TAG_DEC = 1
_TAG_WHILE = 2
_TAG_SETCONST = 3
_TAG_EVAL = 4
_TAG_COPY = 5


def pair(a: int, b: int) -> int:
    """Cantor pairing, bijective N^2 -> N.

    Computed as (s*s + s)/2 + b with s = a+b; squaring beats s*(s+1)
    on gigabit operands and the intermediates are freed eagerly, which
    matters because the deepest pairings allocate gigabytes.
    """
    s = mpz(a) + b
    t = s * s
    t += s
    del s
    t >>= 1
    t += b
    return t


def unpair(n: int) -> tuple[int, int]:
    """Exact inverse of pair."""
    w = gmpy2.isqrt(8 * mpz(n) + 1)
    w -= 1
    w >>= 1
    t = w * w
    t += w
    t >>= 1
    b = n - t
    del t
    return w - b, b


def _tagged(payload, tag: int):
    code = payload * 6
    code += tag
    return code


def _encode_stmt(st: Statement) -> int:
    t = type(st)
    if t is Inc:
        return _tagged(mpz(st.reg), _TAG_INC)
    if t is Dec:
        return _tagged(mpz(st.reg), _TAG_DEC)
    if t is While:
        return _tagged(pair(st.reg, _encode_list([_encode_stmt(s) for s in st.body])), _TAG_WHILE)
    if t is SetConst:
        return _tagged(pair(st.reg, st.value), _TAG_SETCONST)
    if t is Eval:
        return _tagged(pair(st.dst, pair(st.fn, st.arg)), _TAG_EVAL)
    if t is Copy:
        return _tagged(pair(st.dst, st.src), _TAG_COPY)
    raise TypeError(f"unknown statement {st!r}")


def _encode_list(codes: list[int]) -> int:
    acc = mpz(0)
    while codes:
        head = codes.pop()  # consume in place so giants are freed promptly
        acc = pair(head, acc) + 1
    return acc


def encode_program(p: Program) -> int:
    return _encode_list([_encode_stmt(st) for st in p.body])


def _decode_stmt(s) -> Statement:
    tag = int(s % 6)
    payload = s // 6
    if tag == _TAG_INC:
        return Inc(int(payload))
    if tag == _TAG_DEC:
        return Dec(int(payload))
    if tag == _TAG_WHILE:
        r, body = unpair(payload)
        return While(int(r), _decode_body(body))
    if tag == _TAG_SETCONST:
        r, v = unpair(payload)
        return SetConst(int(r), v)  # v may be gigantic; keep it an mpz
    if tag == _TAG_EVAL:
        dst, rest = unpair(payload)
        fn, arg = unpair(rest)
        return Eval(int(dst), int(fn), int(arg))
    # _TAG_COPY
    dst, src = unpair(payload)
    return Copy(int(dst), int(src))


def _decode_body(n) -> tuple[Statement, ...]:
    out: list[Statement] = []
    n = mpz(n)
    while n != 0:
        h, n = unpair(n - 1)
        out.append(_decode_stmt(h))
    return tuple(out)


@lru_cache(maxsize=64)
def _decode_cached(n) -> Program:
    return Program(_decode_body(n))


def decode_program(n: int) -> Program:
    """Total: every natural is the index of exactly one program."""
    if n < 0:
        raise ValueError("indices are naturals")
    return _decode_cached(mpz(n))


def clear_caches() -> None:
    """Drop the decode cache; decoded giants can pin gigabytes."""
    _decode_cached.cache_clear()


def index_str(n: int) -> str:
    """Decimal rendering used in every file, CLI line, and API payload.

    Goes through gmpy2: CPython caps str() on huge ints and is slow past
    a few million digits anyway.
    """
    return mpz(n).digits(10)


def parse_index(text: str) -> int:
    text = text.strip()
    if not text or not text.isdigit():
        raise ValueError(f"not a decimal natural: {text[:40]!r}")
    return mpz(text)
