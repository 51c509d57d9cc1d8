import pytest
from hypothesis import given, settings

from conftest import programs
from recwb.lang import (
    FUEL_EXHAUSTED,
    Copy,
    Dec,
    Eval,
    Halted,
    Inc,
    Program,
    ProgramSyntaxError,
    SetConst,
    While,
    interpret,
    parse,
    pretty_print,
)
from recwb.numbering import encode_program


def test_empty_program_is_identity():
    assert interpret(Program(), 7, 10) == Halted(7, 0)


def test_single_increment():
    assert interpret(Program((Inc(0),)), 5, 10) == Halted(6, 1)


def test_nonterminating_loop_exhausts_fuel():
    # hand trace: dec/inc keep r0 at 1 forever, every re-test sees nonzero
    loop = Program((While(0, (Dec(0), Inc(0))),))
    assert interpret(loop, 1, 50) is FUEL_EXHAUSTED


def test_dec_saturates_at_zero():
    assert interpret(Program((Dec(0),)), 0, 10) == Halted(0, 1)


def test_unmentioned_registers_read_zero():
    assert interpret(Program((Copy(0, 9),)), 3, 10) == Halted(0, 1)


def test_while_condition_test_costs_one_fuel_each():
    # while r0 { dec r0 } on input 2: test, dec, test, dec, test = 5
    p = Program((While(0, (Dec(0),)),))
    assert interpret(p, 2, 100) == Halted(0, 5)
    assert interpret(p, 2, 5) == Halted(0, 5)
    assert interpret(p, 2, 4) is FUEL_EXHAUSTED


def test_eval_draws_from_caller_budget():
    succ = encode_program(Program((Inc(0),)))
    wrapper = Program((SetConst(1, succ), Eval(0, 1, 0)))
    # SetConst 1, Eval 1, inner Inc 1
    assert interpret(wrapper, 41, 100) == Halted(42, 3)
    assert interpret(wrapper, 41, 3) == Halted(42, 3)
    assert interpret(wrapper, 41, 2) is FUEL_EXHAUSTED


def test_eval_soundness_against_direct_run():
    inner = Program((Inc(0), Inc(0), While(0, (Dec(0),))))
    e = encode_program(inner)
    wrapper = Program((SetConst(1, e), Eval(0, 1, 0)))
    for x in range(6):
        for f in (10, 50, 1000):
            direct = interpret(inner, x, f - 2)
            if direct is not FUEL_EXHAUSTED:
                wrapped = interpret(wrapper, x, f)
                assert wrapped.value == direct.value


def test_negative_fuel_rejected():
    with pytest.raises(ValueError):
        interpret(Program(), 0, -1)


@given(programs(depth=3, max_size=4))
@settings(max_examples=60, deadline=None)
def test_determinism(p):
    assert interpret(p, 3, 200) == interpret(p, 3, 200)


@given(programs(depth=3, max_size=4))
@settings(max_examples=60, deadline=None)
def test_fuel_monotonicity(p):
    out = interpret(p, 2, 100)
    if out is not FUEL_EXHAUSTED:
        for extra in (1, 17, 1000):
            assert interpret(p, 2, 100 + extra) == out
        assert out.fuel_used <= 100


@given(programs())
@settings(max_examples=100, deadline=None)
def test_parse_pretty_print_round_trip(p):
    assert parse(pretty_print(p)) == p


def test_pretty_print_empty_is_empty_string():
    assert pretty_print(Program()) == ""
    assert parse("") == Program()


def test_pretty_print_inc_canonical():
    assert pretty_print(Program((Inc(0),))) == "inc r0\n"


def test_parse_reports_line_numbers():
    with pytest.raises(ProgramSyntaxError) as exc:
        parse("inc r0\nbogus r1\n")
    assert "line 2" in str(exc.value)
    with pytest.raises(ProgramSyntaxError):
        parse("while r0 {\ninc r0\n")  # unclosed block
    with pytest.raises(ProgramSyntaxError):
        parse("}")


def test_parse_accepts_comments_and_blank_lines():
    text = "# doubles nothing\n\ninc r1\nwhile r1 {\n  dec r1\n}\n"
    p = parse(text)
    assert p == Program((Inc(1), While(1, (Dec(1),))))
