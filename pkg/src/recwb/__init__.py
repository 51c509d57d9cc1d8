"""Recursion workbench: a register language with a universal Eval primitive,
a bijective program numbering, diagonal program construction, a certificate
calculus, and the stateful memo procedure built from them."""

from .algebra import (
    build_psi,
    compose,
    const_program,
    identity_index,
    prepend_value,
    psi,
)
from .certify import Certificate, CertificateError, Registry, check_syntactic_total
from .lang import (
    FUEL_EXHAUSTED,
    Copy,
    Dec,
    Eval,
    Halted,
    Inc,
    Program,
    SetConst,
    While,
    interpret,
    parse,
    pretty_print,
)
from .numbering import decode_program, encode_program, index_str, pair, parse_index, unpair
from .qproc import Session, SessionFormatError

__all__ = [
    "build_psi", "compose", "const_program", "identity_index", "prepend_value",
    "psi", "Certificate", "CertificateError", "Registry", "check_syntactic_total",
    "FUEL_EXHAUSTED", "Copy", "Dec", "Eval", "Halted", "Inc", "Program",
    "SetConst", "While", "interpret", "parse", "pretty_print",
    "decode_program", "encode_program", "index_str", "pair", "parse_index",
    "unpair", "Session", "SessionFormatError",
]

__version__ = "0.1.0"
