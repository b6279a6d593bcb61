"""Twisted partial derivatives, scaling automorphisms, and the normal-form
algebra of the words they generate.

derive(i, f) lowers the i-th exponent by one like an ordinary partial
derivative, but scaled by the commutation factor of the exponents left of
slot i against e_i:

    d_i(x^a) = eta(abar_i, e_i) * a_i * x^(a - e_i),
    abar_i = (a_1, ..., a_{i-1}, 0, ..., 0)

At q = 1 this is the ordinary partial derivative; for i = 1 it also applies
to negative powers of x1 (d_1(x1^z) = z x1^(z-1)).  sigma(b, f) rescales
x^a by eta(a, b) and is an algebra automorphism.  Together they obey the
twisted Leibniz rule d_i(fg) = d_i(f) g + sigma_i(f) d_i(g).

Words sigma^g d^b close under composition with normal form sigma-block then
d-block, both sorted by index:

    d_i d_j     = eta(e_i, e_j) d_j d_i
    sigma_a sigma_b = sigma_(a+b)
    sigma_a d_i = eta(a, e_i) d_i sigma_a

so two words multiply to a single word with a q-power:

    (s^g1 d^b1)(s^g2 d^b2) = eta(b1, g2) q**pairing(b1, b2) s^(g1+g2) d^(b1+b2)

reduce_word re-derives normal forms one adjacent rewrite at a time under a
configurable strategy, so the test suite can confirm the rewriting system is
confluent rather than assuming it.
"""

from __future__ import annotations

from .bicharacter import (basis_vector, commutation_exponent, commutation_factor,
                          pairing, vector_add, vector_neg)
from .qspace import Element, monomials_up_to, random_element, random_exponent
from .report import CheckReport
from .scalar import LaurentScalar, format_term, join_terms


def derive(i: int, f: Element) -> Element:
    """Apply the twisted partial derivative d_i (1-based index)."""
    n = f.n
    if not 1 <= i <= n:
        raise ValueError(f"derivative index {i} out of range 1..{n}")
    e_i = basis_vector(n, i)
    terms = {}
    for alpha, coeff in f.terms.items():
        a_i = alpha[i - 1]
        if a_i == 0:
            continue
        abar = alpha[: i - 1] + (0,) * (n - i + 1)
        factor = LaurentScalar.q_power(commutation_exponent(abar, e_i), a_i)
        key = tuple(e - d for e, d in zip(alpha, e_i))
        c = coeff * factor
        prev = terms.get(key)
        c = c if prev is None else prev + c
        if c:
            terms[key] = c
        else:
            terms.pop(key, None)
    return Element(n, terms)


def sigma(beta, f: Element) -> Element:
    """Apply the automorphism sigma_beta: x^a -> eta(a, beta) x^a."""
    beta = tuple(beta)
    if len(beta) != f.n:
        raise ValueError(f"dimension mismatch: {len(beta)} != {f.n}")
    return Element(f.n, {
        alpha: coeff * LaurentScalar.q_power(commutation_exponent(alpha, beta))
        for alpha, coeff in f.terms.items()
    })


def word_key_mul(k1, k2):
    """Merge two normal-form word keys (gamma, beta); returns (scalar, key)."""
    g1, b1 = k1
    g2, b2 = k2
    exponent = commutation_exponent(b1, g2) + pairing(b1, b2)
    return LaurentScalar.q_power(exponent), (vector_add(g1, g2), vector_add(b1, b2))


def _validate_word(n, gamma, beta):
    gamma, beta = tuple(gamma), tuple(beta)
    if len(gamma) != n or len(beta) != n:
        raise ValueError(f"word exponents must have length {n}")
    if any(not isinstance(e, int) for e in gamma + beta):
        raise TypeError("word exponents must be int")
    if any(e < 0 for e in beta):
        raise ValueError("derivative exponents must be nonnegative")
    return gamma, beta


class Operator:
    """A Laurent combination of normal-form words sigma^gamma d^beta.

    terms maps (gamma, beta) pairs to nonzero coefficients; gamma ranges over
    Z^n (the sigmas are invertible), beta over (Z_+)^n.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError("dimension must be >= 1")
        self.n = n
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (gamma, beta), coeff in items:
                gamma, beta = _validate_word(n, gamma, beta)
                if not isinstance(coeff, LaurentScalar):
                    coeff = LaurentScalar({0: coeff})
                if not coeff:
                    continue
                key = (gamma, beta)
                prev = clean.get(key)
                coeff = coeff if prev is None else prev + coeff
                if coeff:
                    clean[key] = coeff
                else:
                    clean.pop(key, None)
        self.terms = clean

    @classmethod
    def zero(cls, n: int) -> "Operator":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "Operator":
        z = (0,) * n
        return cls(n, {(z, z): 1})

    @classmethod
    def word(cls, n: int, gamma, beta, coeff=1) -> "Operator":
        return cls(n, {(tuple(gamma), tuple(beta)): coeff})

    @classmethod
    def partial(cls, n: int, i: int) -> "Operator":
        return cls.word(n, (0,) * n, basis_vector(n, i))

    @classmethod
    def sigma_word(cls, n: int, gamma) -> "Operator":
        return cls.word(n, gamma, (0,) * n)

    @classmethod
    def sigma_gen(cls, n: int, i: int, power: int = 1) -> "Operator":
        return cls.word(n, tuple(power if k == i - 1 else 0 for k in range(n)), (0,) * n)

    def _check_dim(self, other: "Operator") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} != {other.n}")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        self._check_dim(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            s = out.get(key)
            s = coeff if s is None else s + coeff
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        result = Operator.__new__(Operator)
        result.n, result.terms = self.n, out
        return result

    def __neg__(self):
        result = Operator.__new__(Operator)
        result.n = self.n
        result.terms = {key: -c for key, c in self.terms.items()}
        return result

    def __sub__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return self + (-other)

    def scale(self, coeff) -> "Operator":
        if not isinstance(coeff, LaurentScalar):
            coeff = LaurentScalar({0: coeff})
        return Operator(self.n, {key: c * coeff for key, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Operator):
            self._check_dim(other)
            out = {}
            for k1, c1 in self.terms.items():
                for k2, c2 in other.terms.items():
                    scalar, key = word_key_mul(k1, k2)
                    c = c1 * c2 * scalar
                    s = out.get(key)
                    s = c if s is None else s + c
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
            result = Operator.__new__(Operator)
            result.n, result.terms = self.n, out
            return result
        if isinstance(other, (int, LaurentScalar)) or type(other).__name__ == "Fraction":
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentScalar)) or type(other).__name__ == "Fraction":
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers are supported")
        out = Operator.one(self.n)
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Operator):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def apply(self, f: Element) -> Element:
        """Act on an algebra element: derivatives rightmost-first, then the
        sigma block, then the coefficient."""
        if f.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} != {f.n}")
        out = Element.zero(self.n)
        for (gamma, beta), coeff in self.terms.items():
            g = f
            for i in range(self.n, 0, -1):
                for _ in range(beta[i - 1]):
                    g = derive(i, g)
                if not g:
                    break
            if not g:
                continue
            if any(gamma):
                g = sigma(gamma, g)
            out = out + g.scale(coeff)
        return out

    def sorted_terms(self):
        return sorted(self.terms.items())

    def single_term(self):
        if len(self.terms) == 1:
            return next(iter(self.terms.items()))
        return None

    def __str__(self) -> str:
        parts = []
        for (gamma, beta), coeff in self.sorted_terms():
            parts.append(format_term(coeff, word_str(gamma, beta)))
        return join_terms(parts)

    def __repr__(self) -> str:
        return f"Operator(n={self.n}, {self})"

    def to_json(self):
        return {
            "n": self.n,
            "terms": [
                {"gamma": list(gamma), "beta": list(beta), "coeff": coeff.to_json()["coeff"]}
                for (gamma, beta), coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data) -> "Operator":
        n = data["n"]
        return cls(n, {
            (tuple(term["gamma"]), tuple(term["beta"])):
                LaurentScalar.from_json({"coeff": term["coeff"]})
            for term in data["terms"]
        })


def word_str(gamma, beta) -> str | None:
    """Printable form of sigma^gamma d^beta, or None for the identity word."""
    pieces = []
    for i, e in enumerate(gamma, start=1):
        if e == 0:
            continue
        pieces.append(f"s{i}" if e == 1 else f"s{i}^{e}")
    for i, e in enumerate(beta, start=1):
        if e == 0:
            continue
        pieces.append(f"d{i}" if e == 1 else f"d{i}^{e}")
    return " ".join(pieces) if pieces else None


# ---------------------------------------------------------------------------
# Letter-level rewriting (used by the confluence checks)

def word_letters(gamma, beta):
    """Spell sigma^gamma d^beta as a list of generator letters."""
    letters = []
    for i, e in enumerate(gamma, start=1):
        letters.extend([("s", i, 1 if e > 0 else -1)] * abs(e))
    for i, e in enumerate(beta, start=1):
        letters.extend([("d", i)] * e)
    return letters


def _swap_exponent(left, right):
    """q-exponent for swapping adjacent letters left,right -> right,left,
    or None if the pair is already in normal order."""
    if left[0] == "d" and right[0] == "s":
        # d_i s_j^t = q^(t*(j-i)) s_j^t d_i
        return right[2] * (right[1] - left[1])
    if left[0] == "d" and right[0] == "d" and left[1] > right[1]:
        # d_i d_j = q^(j-i) d_j d_i for i > j
        return right[1] - left[1]
    if left[0] == "s" and right[0] == "s" and left[1] > right[1]:
        return 0
    return None


def reduce_word(n: int, letters, strategy="left", rng=None) -> Operator:
    """Bring a generator word to normal form one adjacent rewrite at a time.

    strategy 'left'/'right' picks the first/last admissible position each
    step; 'random' draws one from rng.  Every choice must reach the same
    normal form -- the confluence check exercises exactly that.
    """
    word = list(letters)
    exponent = 0
    while True:
        admissible = [k for k in range(len(word) - 1)
                      if _swap_exponent(word[k], word[k + 1]) is not None]
        if not admissible:
            break
        if strategy == "left":
            k = admissible[0]
        elif strategy == "right":
            k = admissible[-1]
        elif strategy == "random":
            k = rng.choice(admissible)
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        exponent += _swap_exponent(word[k], word[k + 1])
        word[k], word[k + 1] = word[k + 1], word[k]
    gamma = [0] * n
    beta = [0] * n
    for letter in word:
        if letter[0] == "s":
            gamma[letter[1] - 1] += letter[2]
        else:
            beta[letter[1] - 1] += 1
    return Operator.word(n, tuple(gamma), tuple(beta), LaurentScalar.q_power(exponent))


def letters_to_operator(n: int, letters) -> Operator:
    """Multiply the letters out via the normal-form product (no rewriting)."""
    out = Operator.one(n)
    for letter in letters:
        if letter[0] == "s":
            out = out * Operator.sigma_gen(n, letter[1], letter[2])
        else:
            out = out * Operator.partial(n, letter[1])
    return out


def random_letters(rng, n: int, max_len: int = 6):
    length = rng.randint(1, max_len)
    letters = []
    for _ in range(length):
        if rng.random() < 0.5:
            letters.append(("d", rng.randint(1, n)))
        else:
            letters.append(("s", rng.randint(1, n), rng.choice((1, -1))))
    return letters


def words_up_to(n: int, degree: int):
    """All normal-form word keys (gamma, beta) with sum|gamma| + sum(beta) <= degree."""
    out = []
    def rec_gamma(i, remaining, prefix):
        if i == n:
            rec_beta(0, remaining, prefix, [])
            return
        for e in range(-remaining, remaining + 1):
            rec_gamma(i + 1, remaining - abs(e), prefix + [e])
    def rec_beta(i, remaining, gamma, prefix):
        if i == n:
            out.append((tuple(gamma), tuple(prefix)))
            return
        for e in range(remaining + 1):
            rec_beta(i + 1, remaining - e, gamma, prefix + [e])
    rec_gamma(0, degree, [])
    return out


# ---------------------------------------------------------------------------
# Checkers

def weyl_relation_check(n: int, deg_bound: int = 4) -> CheckReport:
    """d_i x_j = delta_ij + eta(e_j, e_i) x_j d_i as operators, applied to
    every monomial in the box |a1| <= deg_bound, 0 <= a_i <= deg_bound."""
    if deg_bound < 1:
        raise ValueError("deg_bound must be >= 1")
    from .qspace import monomial_box

    report = CheckReport(f"weyl(n={n})")
    rel = report.new("weyl: d_i(x_j f) = delta_ij f + eta(e_j,e_i) x_j d_i(f)")
    for i in range(1, n + 1):
        e_i = basis_vector(n, i)
        for j in range(1, n + 1):
            x_j = Element.generator(n, j)
            factor = commutation_factor(basis_vector(n, j), e_i)
            for alpha in monomial_box(n, deg_bound):
                f = Element.monomial(n, alpha)
                lhs = derive(i, x_j * f)
                rhs = (f if i == j else Element.zero(n)) + (x_j * derive(i, f)).scale(factor)
                rel.record(f"i={i} j={j} alpha={list(alpha)}", lhs, rhs)
    return report


def check_derivations(n: int, deg_bound: int = 4, samples: int = 200, seed: int = 0) -> CheckReport:
    """Twisted Leibniz rule, sigma/derivative intertwining, derivative
    commutation, and the classical shape of d_1 on Laurent powers."""
    import random

    rng = random.Random(f"{seed}:derivations:{n}")
    report = CheckReport(f"derivations(n={n})")

    leibniz = report.new("leibniz: d_i(x^a g) = d_i(x^a) g + sigma_i(x^a) d_i(g)")
    for _ in range(samples):
        alpha = random_exponent(rng, n, -3, 4, 4)
        f = Element.monomial(n, alpha)
        g = random_element(rng, n)
        for i in range(1, n + 1):
            e_i = basis_vector(n, i)
            lhs = derive(i, f * g)
            rhs = derive(i, f) * g + sigma(e_i, f) * derive(i, g)
            leibniz.record(f"i={i} a={list(alpha)} g={g}", lhs, rhs)

    intertwine = report.new("intertwine: sigma_a(d_i(f)) = eta(a,e_i) d_i(sigma_a(f))")
    commute = report.new("commute: d_i(d_j(f)) = eta(e_i,e_j) d_j(d_i(f))")
    for alpha in monomials_up_to(n, deg_bound):
        f = Element.monomial(n, alpha)
        a = random_exponent(rng, n, -2, 2, 2)
        for i in range(1, n + 1):
            e_i = basis_vector(n, i)
            lhs = sigma(a, derive(i, f))
            rhs = derive(i, sigma(a, f)).scale(commutation_factor(a, e_i))
            intertwine.record(f"i={i} a={list(a)} alpha={list(alpha)}", lhs, rhs)
            for j in range(1, n + 1):
                lhs2 = derive(i, derive(j, f))
                rhs2 = derive(j, derive(i, f)).scale(
                    commutation_factor(e_i, basis_vector(n, j)))
                commute.record(f"i={i} j={j} alpha={list(alpha)}", lhs2, rhs2)

    laurent = report.new("laurent: d_1(x1^z) = z x1^(z-1)")
    for z in range(-deg_bound, deg_bound + 1):
        alpha = (z,) + (0,) * (n - 1)
        expected = Element.monomial(n, (z - 1,) + (0,) * (n - 1), z) if z else Element.zero(n)
        laurent.record(f"z={z}", derive(1, Element.monomial(n, alpha)), expected)
    return report


def check_operator_algebra(n: int, samples: int = 200, seed: int = 0, max_len: int = 6) -> CheckReport:
    """Confluence of the word rewriting, representation property of the
    action, product associativity, and sigma invertibility."""
    import random

    rng = random.Random(f"{seed}:operators:{n}")
    report = CheckReport(f"operator-algebra(n={n})")

    confluent = report.new("rewriting.confluent: all strategies agree with the merged product")
    for _ in range(samples):
        letters = random_letters(rng, n, max_len)
        merged = letters_to_operator(n, letters)
        inputs = f"letters={letters}"
        confluent.record(inputs, reduce_word(n, letters, "left"), merged)
        confluent.record(inputs, reduce_word(n, letters, "right"), merged)
        confluent.record(inputs, reduce_word(n, letters, "random", rng), merged)

    represent = report.new("action.representation: (uv)(f) = u(v(f))")
    for _ in range(samples):
        u = letters_to_operator(n, random_letters(rng, n, 3))
        v = letters_to_operator(n, random_letters(rng, n, 3))
        f = random_element(rng, n)
        represent.record(f"u={u} v={v} f={f}", (u * v).apply(f), u.apply(v.apply(f)))

    assoc = report.new("mul.associative: (uv)w = u(vw)")
    for _ in range(max(1, samples // 2)):
        u = letters_to_operator(n, random_letters(rng, n, 3))
        v = letters_to_operator(n, random_letters(rng, n, 3))
        w = letters_to_operator(n, random_letters(rng, n, 3))
        assoc.record(f"u={u} v={v} w={w}", (u * v) * w, u * (v * w))

    inverse = report.new("sigma.inverse: s_i s_i^-1 = 1")
    one = Operator.one(n)
    for i in range(1, n + 1):
        s = Operator.sigma_gen(n, i)
        s_inv = Operator.sigma_gen(n, i, -1)
        inverse.record(f"i={i}", s * s_inv, one)
        inverse.record(f"i={i}", s_inv * s, one)
    return report
