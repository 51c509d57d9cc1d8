import pytest
from hypothesis import strategies as st

from recwb.lang import Copy, Dec, Eval, Inc, Program, SetConst, While

regs = st.integers(min_value=0, max_value=5)
consts = st.integers(min_value=0, max_value=2**64)


def statements(depth: int):
    leaf = st.one_of(
        st.builds(Inc, regs),
        st.builds(Dec, regs),
        st.builds(SetConst, regs, consts),
        st.builds(Copy, regs, regs),
        st.builds(Eval, regs, regs, regs),
    )
    if depth <= 0:
        return leaf
    return st.one_of(
        leaf,
        st.builds(While, regs,
                  st.lists(statements(depth - 1), max_size=3).map(tuple)),
    )


def programs(depth: int = 4, max_size: int = 6):
    return st.builds(Program, st.lists(statements(depth), max_size=max_size).map(tuple))


@pytest.fixture
def fresh_session():
    from recwb.qproc import Session

    return Session()
