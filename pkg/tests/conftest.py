import random

from agjordan import LinearForm, Polynomial, monomials_of_degree


def random_homogeneous(rng: random.Random, nvars: int, degree: int, lo: int = -3, hi: int = 3) -> Polynomial:
    while True:
        p = Polynomial(nvars, {m: rng.randint(lo, hi) for m in monomials_of_degree(nvars, degree)})
        if not p.is_zero():
            return p


def random_linear_form(rng: random.Random, nvars: int, lo: int = -2, hi: int = 2) -> LinearForm:
    while True:
        ell = LinearForm([rng.randint(lo, hi) for _ in range(nvars)])
        if not ell.is_zero():
            return ell
