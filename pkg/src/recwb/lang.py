"""Object language: a minimal register machine with a universal Eval primitive.

Programs are finite statement sequences. Registers are unbounded in count,
hold arbitrary-precision naturals, and read as 0 until written. Convention:
input arrives in register 0, output is read from register 0 on halt.

Every interpretation is fuel-bounded; there is no unbounded-run entry point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Inc:
    reg: int


@dataclass(frozen=True)
class Dec:
    reg: int  # saturates at 0


@dataclass(frozen=True)
class SetConst:
    reg: int
    value: int


@dataclass(frozen=True)
class Copy:
    dst: int
    src: int


@dataclass(frozen=True)
class Eval:
    """dst := result of running the program decoded from register `fn`
    on the value of register `arg`, within the caller's remaining fuel."""

    dst: int
    fn: int
    arg: int


@dataclass(frozen=True)
class While:
    reg: int
    body: tuple["Statement", ...]

    def __post_init__(self):
        object.__setattr__(self, "body", tuple(self.body))


Statement = Union[Inc, Dec, SetConst, Copy, Eval, While]


@dataclass(frozen=True)
class Program:
    body: tuple[Statement, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "body", tuple(self.body))


@dataclass(frozen=True)
class Halted:
    value: int
    fuel_used: int


class FuelExhausted:
    """Singleton outcome: the budget ran out before the program halted.

    Means "did not halt within budget", never "diverges".
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "FuelExhausted"


FUEL_EXHAUSTED = FuelExhausted()

RunOutcome = Union[Halted, FuelExhausted]


class _OutOfFuel(Exception):
    pass


def interpret(program: Program, input: int, fuel: int) -> RunOutcome:
    """Run `program` on `input` with a step budget.

    Each statement costs 1 fuel, including every While condition test (the
    initial test and each loop re-test). An Eval costs 1 plus whatever the
    recursive interpretation consumes out of the caller's remaining budget.
    """
    if fuel < 0:
        raise ValueError("fuel must be >= 0")
    # deferred import: numbering depends on this module for Program
    from .numbering import decode_program

    regs: dict[int, int] = {0: input}
    remaining = fuel

    def charge():
        nonlocal remaining
        if remaining <= 0:
            raise _OutOfFuel
        remaining -= 1

    def run_seq(stmts):
        nonlocal remaining
        for st in stmts:
            charge()
            if type(st) is Inc:
                regs[st.reg] = regs.get(st.reg, 0) + 1
            elif type(st) is Dec:
                v = regs.get(st.reg, 0)
                if v > 0:
                    regs[st.reg] = v - 1
            elif type(st) is SetConst:
                regs[st.reg] = st.value
            elif type(st) is Copy:
                regs[st.dst] = regs.get(st.src, 0)
            elif type(st) is While:
                # the charge above paid for the first condition test
                while regs.get(st.reg, 0) != 0:
                    run_seq(st.body)
                    charge()  # re-test
            elif type(st) is Eval:
                inner = interpret(
                    decode_program(regs.get(st.fn, 0)),
                    regs.get(st.arg, 0),
                    remaining,
                )
                if inner is FUEL_EXHAUSTED:
                    raise _OutOfFuel
                remaining -= inner.fuel_used
                regs[st.dst] = inner.value
            else:
                raise TypeError(f"unknown statement {st!r}")

    try:
        run_seq(program.body)
    except _OutOfFuel:
        return FUEL_EXHAUSTED
    return Halted(regs.get(0, 0), fuel - remaining)


# --- canonical text form ------------------------------------------------
#
# One statement per line, nested While blocks brace-delimited:
#
#   inc r0
#   dec r1
#   set r2 41
#   copy r0 r2
#   eval r0 r1 r2
#   while r1 {
#     dec r1
#   }
#
# Indentation is cosmetic on input; pretty_print emits two spaces per depth.


class ProgramSyntaxError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def pretty_print(p: Program) -> str:
    lines: list[str] = []

    def emit(stmts, depth):
        pad = "  " * depth
        for st in stmts:
            if type(st) is Inc:
                lines.append(f"{pad}inc r{st.reg}")
            elif type(st) is Dec:
                lines.append(f"{pad}dec r{st.reg}")
            elif type(st) is SetConst:
                lines.append(f"{pad}set r{st.reg} {st.value}")
            elif type(st) is Copy:
                lines.append(f"{pad}copy r{st.dst} r{st.src}")
            elif type(st) is Eval:
                lines.append(f"{pad}eval r{st.dst} r{st.fn} r{st.arg}")
            elif type(st) is While:
                lines.append(f"{pad}while r{st.reg} {{")
                emit(st.body, depth + 1)
                lines.append(f"{pad}}}")
            else:
                raise TypeError(f"unknown statement {st!r}")

    emit(p.body, 0)
    return "\n".join(lines) + ("\n" if lines else "")


_REG = re.compile(r"^r(0|[1-9][0-9]*)$")
_NAT = re.compile(r"^(0|[1-9][0-9]*)$")


def parse(text: str) -> Program:
    """Inverse of pretty_print. Raises ProgramSyntaxError with a line number."""

    def reg(tok: str, lineno: int) -> int:
        m = _REG.match(tok)
        if not m:
            raise ProgramSyntaxError(f"expected register, got {tok!r}", lineno)
        return int(m.group(1))

    def nat(tok: str, lineno: int) -> int:
        if not _NAT.match(tok):
            raise ProgramSyntaxError(f"expected natural number, got {tok!r}", lineno)
        return int(tok)

    stack: list[tuple[list[Statement], int]] = [([], 0)]  # (block, reg-of-while)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == "}":
            if len(stack) == 1:
                raise ProgramSyntaxError("unmatched '}'", lineno)
            body, wreg = stack.pop()
            stack[-1][0].append(While(wreg, tuple(body)))
            continue
        toks = line.split()
        op = toks[0]
        if op == "inc" and len(toks) == 2:
            stack[-1][0].append(Inc(reg(toks[1], lineno)))
        elif op == "dec" and len(toks) == 2:
            stack[-1][0].append(Dec(reg(toks[1], lineno)))
        elif op == "set" and len(toks) == 3:
            stack[-1][0].append(SetConst(reg(toks[1], lineno), nat(toks[2], lineno)))
        elif op == "copy" and len(toks) == 3:
            stack[-1][0].append(Copy(reg(toks[1], lineno), reg(toks[2], lineno)))
        elif op == "eval" and len(toks) == 4:
            stack[-1][0].append(
                Eval(reg(toks[1], lineno), reg(toks[2], lineno), reg(toks[3], lineno))
            )
        elif op == "while" and len(toks) == 3 and toks[2] == "{":
            stack.append(([], reg(toks[1], lineno)))
        else:
            raise ProgramSyntaxError(f"cannot parse {line!r}", lineno)
    if len(stack) > 1:
        raise ProgramSyntaxError("unclosed 'while' block", len(text.splitlines()) or 1)
    return Program(tuple(stack[0][0]))
