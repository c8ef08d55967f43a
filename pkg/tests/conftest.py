import pytest

from cpext import corpus


@pytest.fixture
def C2():
    return corpus.chain(2)


@pytest.fixture
def C3():
    return corpus.chain(3)


@pytest.fixture
def M3():
    return corpus.m3()


@pytest.fixture
def N5():
    return corpus.n5()


@pytest.fixture
def B3():
    return corpus.boolean_lattice(3)


@pytest.fixture(scope="session")
def small_lattices():
    """Every enumerated lattice with 1..5 elements plus the small named ones."""
    out = [(f"L{n}.{k}", L) for n in range(1, 6)
           for k, L in enumerate(corpus.enumerate_lattices(n))]
    out += [(name, corpus.named(name)) for name in corpus.names() if corpus.named(name).n <= 10]
    return out
