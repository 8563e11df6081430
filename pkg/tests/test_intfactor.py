"""Integer primality/factorization against sympy."""

import random

import sympy

from afcheck.integerfactor import factorint, is_prime, squarefree_part


def test_is_prime_small_range():
    for n in range(2, 2000):
        assert is_prime(n) == sympy.isprime(n), n


def test_is_prime_carmichael_and_strong_pseudoprimes():
    for n in (561, 1105, 1729, 2465, 2821, 6601, 3215031751):
        assert not is_prime(n)


def test_factorint_reconstructs():
    rng = random.Random(17)
    for _ in range(60):
        n = rng.randint(2, 10 ** 12)
        factors = factorint(n)
        prod = 1
        for p, e in factors.items():
            assert is_prime(p)
            prod *= p ** e
        assert prod == n


def test_factorint_semiprimes():
    semiprimes = [101 * 103, 99991 * 99989, 1000003 * 1000033]
    for n in semiprimes:
        factors = factorint(n)
        assert factors == sympy.factorint(n)


def test_factorint_handles_sign_and_units():
    assert factorint(-12) == {2: 2, 3: 1}
    assert factorint(1) == {}
    assert factorint(0) == {}


def test_squarefree_part():
    assert squarefree_part(8) == 2
    assert squarefree_part(45) == 5
    assert squarefree_part(-12) == -3
    assert squarefree_part(7) == 7
    rng = random.Random(29)
    for _ in range(40):
        n = rng.randint(1, 10 ** 6)
        d = squarefree_part(n)
        q = n // d
        assert d * q == n
        root = sympy.sqrt(q)
        assert root.is_integer
