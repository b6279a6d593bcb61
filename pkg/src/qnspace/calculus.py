"""First-order differential calculus and the graded wedge algebra above it.

The bimodule of 1-forms has basis dx_1..dx_n with

    x_i dx_j = eta(e_i, e_j) dx_j x_i        (so f dx_i = dx_i sigma_i(f))
    dx_i ^ dx_j = (delta_ij - eta(e_i, e_j)) dx_j ^ dx_i

Canonical form keeps wedge indices strictly increasing with the algebra
coefficient on the right, which is the shape the differential produces
directly:

    d(f) = dx_1 d_1(f) + ... + dx_n d_n(f)

On a degree-k wedge monomial, d(dx_W f) = (-1)^k dx_W ^ d(f); d^2 = 0 and the
graded Leibniz rule then hold exactly (and are checked, not assumed).  The
coactions send a 1-form into a mixed tensor with the form in one slot:
delta_right(dx_i) applies d to the left leg of the coproduct of x_i,
delta_left to the right leg, both extended by the bimodule rule
delta(a p b) = D(a) delta(p) D(b).
"""

from __future__ import annotations

from functools import lru_cache

from .bicharacter import basis_vector, commutation_exponent, pairing, vector_add
from .operators import derive, sigma
from .qspace import Element, monomial_key_mul, monomial_str, random_element, random_exponent
from .report import CheckReport
from .scalar import LaurentScalar, format_term, join_terms
from .tensors import Tensor


def push_coeff_right(f: Element, i: int) -> Element:
    """The coefficient that moves f from the left of dx_i to the right:
    f dx_i = dx_i sigma_i(f)."""
    if not 1 <= i <= f.n:
        raise ValueError(f"index {i} out of range 1..{f.n}")
    return sigma(basis_vector(f.n, i), f)


def _wedge_sort(indices):
    """Sort wedge indices, returning (sign_and_q_exponent, sorted) or None
    when an index repeats (the wedge square is zero)."""
    word = list(indices)
    sign = 1
    exponent = 0
    for k in range(1, len(word)):
        m = k
        while m > 0 and word[m - 1] > word[m]:
            i, j = word[m - 1], word[m]
            # dx_i ^ dx_j = -eta(e_i, e_j) dx_j ^ dx_i for i != j
            sign = -sign
            exponent += j - i
            word[m - 1], word[m] = word[m], word[m - 1]
            m -= 1
    for k in range(1, len(word)):
        if word[k - 1] == word[k]:
            return None
    return (sign, exponent), tuple(word)


def form_key_mul(key1, key2):
    """Merge two form keys (wedge, alpha); None when the wedge collapses.

    (dx_W1 x^a1)(dx_W2 x^a2) = dx_W1 ^ dx_W2 sigma_W2(x^a1) x^a2 where
    sigma_W2 scales by the commutation factor of a1 against sum of e_j, j in W2.
    """
    w1, a1 = key1
    w2, a2 = key2
    sorted_wedge = _wedge_sort(w1 + w2)
    if sorted_wedge is None:
        return None
    (sign, q_exp), wedge = sorted_wedge
    n = len(a1)
    move = [0] * n
    for j in w2:
        move[j - 1] += 1
    exponent = q_exp + commutation_exponent(a1, tuple(move)) + pairing(a1, a2)
    return LaurentScalar.q_power(exponent, sign), (wedge, vector_add(a1, a2))


class Form:
    """A graded exterior-algebra element: map {wedge tuple: Element} with the
    algebra coefficients on the right of the dx block."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError("dimension must be >= 1")
        self.n = n
        clean: dict[tuple[int, ...], Element] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for wedge, coeff in items:
                wedge = tuple(wedge)
                if any(not 1 <= i <= n for i in wedge):
                    raise ValueError(f"wedge indices {list(wedge)} out of range 1..{n}")
                if any(a >= b for a, b in zip(wedge, wedge[1:])):
                    raise ValueError(f"wedge indices must be strictly increasing, got {list(wedge)}")
                if not isinstance(coeff, Element):
                    raise TypeError("form coefficients must be Elements")
                if coeff.n != n:
                    raise ValueError(f"dimension mismatch: {coeff.n} != {n}")
                if not coeff:
                    continue
                prev = clean.get(wedge)
                coeff = coeff if prev is None else prev + coeff
                if coeff:
                    clean[wedge] = coeff
                else:
                    clean.pop(wedge, None)
        self.terms = clean

    @classmethod
    def zero(cls, n: int) -> "Form":
        return cls(n)

    @classmethod
    def from_element(cls, f: Element) -> "Form":
        return cls(f.n, {(): f})

    @classmethod
    def dx(cls, n: int, i: int) -> "Form":
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range 1..{n}")
        return cls(n, {(i,): Element.one(n)})

    @classmethod
    def monomial(cls, n: int, wedge, coeff: Element) -> "Form":
        return cls(n, {tuple(wedge): coeff})

    def _check_dim(self, other: "Form") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} != {other.n}")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        self._check_dim(other)
        out = dict(self.terms)
        for wedge, coeff in other.terms.items():
            s = out.get(wedge)
            s = coeff if s is None else s + coeff
            if s:
                out[wedge] = s
            else:
                out.pop(wedge, None)
        result = Form.__new__(Form)
        result.n, result.terms = self.n, out
        return result

    def __neg__(self):
        result = Form.__new__(Form)
        result.n = self.n
        result.terms = {w: -c for w, c in self.terms.items()}
        return result

    def __sub__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self + (-other)

    def scale(self, coeff) -> "Form":
        return Form(self.n, {w: c.scale(coeff) for w, c in self.terms.items()})

    def __mul__(self, other):
        """Wedge/module product.  Right-multiplying by an Element multiplies
        the coefficients; multiplying two forms wedges the dx blocks, moving
        left coefficients through via sigma."""
        if isinstance(other, Element):
            other = Form.from_element(other)
        if isinstance(other, Form):
            self._check_dim(other)
            out: dict[tuple[int, ...], Element] = {}
            for w1, f1 in self.terms.items():
                for a1, c1 in f1.terms.items():
                    for w2, f2 in other.terms.items():
                        for a2, c2 in f2.terms.items():
                            res = form_key_mul((w1, a1), (w2, a2))
                            if res is None:
                                continue
                            scalar, (wedge, alpha) = res
                            add = Element(self.n, {alpha: c1 * c2 * scalar})
                            if not add:
                                continue
                            prev = out.get(wedge)
                            total = add if prev is None else prev + add
                            if total:
                                out[wedge] = total
                            else:
                                out.pop(wedge, None)
            result = Form.__new__(Form)
            result.n, result.terms = self.n, out
            return result
        if isinstance(other, (int, LaurentScalar)) or type(other).__name__ == "Fraction":
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        # Element * Form is left multiplication: push through the dx block.
        if isinstance(other, Element):
            return Form.from_element(other) * self
        if isinstance(other, (int, LaurentScalar)) or type(other).__name__ == "Fraction":
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def degrees(self):
        return sorted({len(w) for w in self.terms})

    def component(self, degree: int) -> "Form":
        return Form(self.n, {w: c for w, c in self.terms.items() if len(w) == degree})

    def max_degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0]))

    def __str__(self) -> str:
        parts = []
        for wedge, coeff in self.sorted_terms():
            if not wedge:
                for alpha, c in coeff.sorted_terms():
                    parts.append(format_term(c, monomial_str(alpha)))
                continue
            body = " /\\ ".join(f"dx{i}" for i in wedge)
            single = coeff.single_term()
            if coeff == Element.one(self.n):
                parts.append((False, body))
            elif single is not None:
                alpha, c = single
                negated, text = format_term(c, monomial_str(alpha))
                parts.append((negated, f"{body} * {text}" if text != "1" else body))
            else:
                parts.append((False, f"{body} * ({coeff})"))
        return join_terms(parts)

    def __repr__(self) -> str:
        return f"Form(n={self.n}, {self})"

    def to_json(self):
        return {
            "n": self.n,
            "terms": [
                {"wedge": list(wedge), "coeff": coeff.to_json()}
                for wedge, coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data) -> "Form":
        n = data["n"]
        return cls(n, {
            tuple(term["wedge"]): Element.from_json(term["coeff"])
            for term in data["terms"]
        })


# ---------------------------------------------------------------------------
# Exterior differential

def _d_monomial(n: int, alpha):
    """d(x^alpha) as a list of (scalar, form key) with one dx_i per slot."""
    out = []
    for i in range(1, n + 1):
        a_i = alpha[i - 1]
        if a_i == 0:
            continue
        e_i = basis_vector(n, i)
        abar = alpha[: i - 1] + (0,) * (n - i + 1)
        scalar = LaurentScalar.q_power(commutation_exponent(abar, e_i), a_i)
        out.append((scalar, ((i,), tuple(a - b for a, b in zip(alpha, e_i)))))
    return out


def exterior_d(u) -> Form:
    """The differential: d(f) = sum_i dx_i d_i(f) on degree 0, extended to
    wedge monomials by d(dx_W f) = (-1)^|W| dx_W ^ d(f)."""
    if isinstance(u, Element):
        u = Form.from_element(u)
    if not isinstance(u, Form):
        raise TypeError(f"exterior_d expects Form or Element, got {type(u).__name__}")
    n = u.n
    out = Form.zero(n)
    for wedge, coeff in u.terms.items():
        sign = -1 if len(wedge) % 2 else 1
        block = Form.monomial(n, wedge, Element.one(n)) if wedge else None
        df = Form.zero(n)
        for alpha, c in coeff.terms.items():
            for scalar, (w, a) in _d_monomial(n, alpha):
                df = df + Form.monomial(n, w, Element(n, {a: c * scalar}))
        if block is None:
            out = out + df
        else:
            out = out + (block * df).scale(LaurentScalar.q_power(0, sign))
    return out


# ---------------------------------------------------------------------------
# Coactions (first-order scope: form degree <= 1)

def _embed_coproduct(n: int, alpha, form_slot: int) -> Tensor:
    """The coproduct of x^alpha with one leg viewed as a degree-0 form."""
    from .hopf import _monomial_coproduct

    t = _monomial_coproduct(n, alpha)
    muls = [monomial_key_mul, monomial_key_mul]
    muls[form_slot] = form_key_mul
    terms = {}
    for (a, b), coeff in t.terms.items():
        if form_slot == 0:
            terms[(((), a), b)] = coeff
        else:
            terms[(a, ((), b))] = coeff
    return Tensor(tuple(muls), terms)


@lru_cache(maxsize=None)
def _delta_right_generator(n: int, i: int) -> Tensor:
    """(d x id) applied to the coproduct of x_i: a (form, algebra) tensor."""
    from .hopf import _monomial_coproduct

    e_i = basis_vector(n, i) if i >= 1 else None
    t = _monomial_coproduct(n, e_i)
    terms = {}
    for (a, b), coeff in t.terms.items():
        for scalar, key in _d_monomial(n, a):
            terms[(key, b)] = coeff * scalar
    return Tensor((form_key_mul, monomial_key_mul), terms)


@lru_cache(maxsize=None)
def _delta_left_generator(n: int, i: int) -> Tensor:
    """(id x d) applied to the coproduct of x_i: an (algebra, form) tensor."""
    from .hopf import _monomial_coproduct

    t = _monomial_coproduct(n, basis_vector(n, i))
    terms = {}
    for (a, b), coeff in t.terms.items():
        for scalar, key in _d_monomial(n, b):
            terms[(a, key)] = coeff * scalar
    return Tensor((monomial_key_mul, form_key_mul), terms)


def _check_first_order(u: Form) -> None:
    if u.max_degree() > 1:
        raise ValueError("coactions are defined on forms of degree <= 1")


def delta_right(u) -> Tensor:
    """Right coaction: form slot left, algebra slot right.  Acts as the
    coproduct on degree 0 and sends dx_i f to ((d x id) D(x_i)) D(f)."""
    if isinstance(u, Element):
        u = Form.from_element(u)
    _check_first_order(u)
    n = u.n
    out = Tensor((form_key_mul, monomial_key_mul))
    for wedge, coeff in u.terms.items():
        for alpha, c in coeff.terms.items():
            if not wedge:
                t = _embed_coproduct(n, alpha, 0)
            else:
                t = _delta_right_generator(n, wedge[0]) * _embed_coproduct(n, alpha, 0)
            out = out + t.scale(c)
    return out


def delta_left(u) -> Tensor:
    """Left coaction: algebra slot left, form slot right."""
    if isinstance(u, Element):
        u = Form.from_element(u)
    _check_first_order(u)
    n = u.n
    out = Tensor((monomial_key_mul, form_key_mul))
    for wedge, coeff in u.terms.items():
        for alpha, c in coeff.terms.items():
            if not wedge:
                t = _embed_coproduct(n, alpha, 1)
            else:
                t = _delta_left_generator(n, wedge[0]) * _embed_coproduct(n, alpha, 1)
            out = out + t.scale(c)
    return out


def form_slot_to_form(t: Tensor, n: int) -> Form:
    """Collapse a 1-slot tensor whose slot is a form key."""
    out = Form.zero(n)
    for (key,), coeff in t.terms.items():
        wedge, alpha = key
        out = out + Form.monomial(n, wedge, Element(n, {alpha: coeff}))
    return out


def _d_key_expansion(n: int):
    """Slot map sending an algebra key to the form keys of its differential."""
    def fn(alpha):
        return [(scalar, (key,)) for scalar, key in _d_monomial(n, alpha)]
    return fn


def _counit_slot(alpha) -> LaurentScalar:
    from .hopf import _counit_key_aq

    return _counit_key_aq(alpha)


def _coproduct_expansion(n: int):
    from .hopf import _monomial_coproduct

    def fn(alpha):
        return [(c, keys) for keys, c in _monomial_coproduct(n, alpha).terms.items()]
    return fn


def _delta_right_expansion(n: int):
    def fn(key):
        wedge, alpha = key
        if not wedge:
            t = _embed_coproduct(n, alpha, 0)
        else:
            t = _delta_right_generator(n, wedge[0]) * _embed_coproduct(n, alpha, 0)
        return [(c, keys) for keys, c in t.terms.items()]
    return fn


def _delta_left_expansion(n: int):
    def fn(key):
        wedge, alpha = key
        if not wedge:
            t = _embed_coproduct(n, alpha, 1)
        else:
            t = _delta_left_generator(n, wedge[0]) * _embed_coproduct(n, alpha, 1)
        return [(c, keys) for keys, c in t.terms.items()]
    return fn


# ---------------------------------------------------------------------------
# Checkers

def random_form(rng, n: int, max_degree: int = 1) -> Form:
    out = Form.zero(n)
    for _ in range(rng.randint(1, 2)):
        degree = rng.randint(0, max_degree)
        indices = sorted(rng.sample(range(1, n + 1), min(degree, n)))
        out = out + Form.monomial(n, tuple(indices), random_element(rng, n, 2))
    return out


def check_calculus(n: int, samples: int = 200, seed: int = 0) -> CheckReport:
    """Leibniz, graded Leibniz, nilpotency of d, associativity of the wedge
    product, and the defining bimodule relation."""
    import random

    rng = random.Random(f"{seed}:calculus:{n}")
    report = CheckReport(f"calculus(n={n})")

    module_rel = report.new("bimodule: x_i dx_j = eta(e_i,e_j) dx_j x_i")
    from .bicharacter import commutation_factor

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            x_i = Element.generator(n, i)
            dx_j = Form.dx(n, j)
            lhs = x_i * dx_j
            rhs = (dx_j * x_i).scale(commutation_factor(basis_vector(n, i), basis_vector(n, j)))
            module_rel.record(f"i={i} j={j}", lhs, rhs)

    dgen = report.new("d-on-generators: d(x_i) = dx_i and d(1) = 0")
    for i in range(1, n + 1):
        dgen.record(f"i={i}", exterior_d(Element.generator(n, i)), Form.dx(n, i))
    dgen.record("f=1", exterior_d(Element.one(n)), Form.zero(n))
    dgen.record("f=x1^-1", exterior_d(Element.x1_inverse(n)),
                Form.monomial(n, (1,), Element.monomial(n, (-2,) + (0,) * (n - 1), -1)))

    leibniz = report.new("leibniz: d(fg) = d(f)g + f d(g)")
    for _ in range(samples):
        f = random_element(rng, n, 2)
        g = random_element(rng, n, 2)
        lhs = exterior_d(f * g)
        rhs = exterior_d(f) * g + f * exterior_d(g)
        leibniz.record(f"f={f} g={g}", lhs, rhs)

    graded = report.new("graded-leibniz: d(u^v) = d(u)^v + (-1)^deg(u) u^d(v)")
    for _ in range(samples):
        deg_u = rng.randint(0, min(2, n))
        indices = tuple(sorted(rng.sample(range(1, n + 1), deg_u)))
        u = Form.monomial(n, indices, random_element(rng, n, 2))
        v = random_form(rng, n, 1)
        sign = -1 if deg_u % 2 else 1
        lhs = exterior_d(u * v)
        rhs = exterior_d(u) * v + (u * exterior_d(v)).scale(sign)
        graded.record(f"u={u} v={v}", lhs, rhs)

    nilpotent = report.new("nilpotency: d(d(u)) = 0")
    zero = Form.zero(n)
    for _ in range(samples):
        f = random_element(rng, n, 3)
        nilpotent.record(f"f={f}", exterior_d(exterior_d(f)), zero)
    for _ in range(samples // 2):
        u = random_form(rng, n, min(2, n))
        nilpotent.record(f"u={u}", exterior_d(exterior_d(u)), zero)

    assoc = report.new("wedge-associative: (uv)w = u(vw)")
    for _ in range(samples // 2):
        u = random_form(rng, n, min(2, n))
        v = random_form(rng, n, 1)
        w = random_form(rng, n, 1)
        assoc.record(f"u={u} v={v} w={w}", (u * v) * w, u * (v * w))
    return report


def check_bicovariance(n: int, samples: int = 100, seed: int = 0) -> CheckReport:
    """Comodule axioms of the two coactions, the bicomodule compatibility,
    relation preservation, the bimodule rule, and agreement with d."""
    import random

    from .bicharacter import commutation_factor
    from .hopf import _monomial_coproduct, coproduct

    rng = random.Random(f"{seed}:bicovariance:{n}")
    report = CheckReport(f"bicovariance(n={n})")
    aq2 = (monomial_key_mul, monomial_key_mul)

    basis_forms = [Form.dx(n, i) for i in range(1, n + 1)]
    basis_forms += [Form.dx(n, i) * Element.generator(n, j)
                    for i in range(1, n + 1) for j in range(1, n + 1)]
    basis_forms += [Form.from_element(Element.generator(n, i)) for i in range(1, n + 1)]
    basis_forms.append(Form.from_element(Element.x1_inverse(n)))

    right_axiom = report.new("right-comodule: (dR x id) dR = (id x D) dR")
    left_axiom = report.new("left-comodule: (id x dL) dL = (D x id) dL")
    bicomodule = report.new("bicomodule: (id x dR) dL = (dL x id) dR")
    counit_leg = report.new("comodule-counit-leg: contracting the algebra leg restores the form")
    for idx, u in enumerate(basis_forms):
        inputs = f"u={u}"
        tr = delta_right(u)
        lhs = tr.expand_slot(0, _delta_right_expansion(n), (form_key_mul, monomial_key_mul))
        rhs = tr.expand_slot(1, _coproduct_expansion(n), aq2)
        right_axiom.record(inputs, lhs, rhs)
        tl = delta_left(u)
        lhs = tl.expand_slot(1, _delta_left_expansion(n), (monomial_key_mul, form_key_mul))
        rhs = tl.expand_slot(0, _coproduct_expansion(n), aq2)
        left_axiom.record(inputs, lhs, rhs)
        lhs = tl.expand_slot(1, _delta_right_expansion(n), (form_key_mul, monomial_key_mul))
        rhs = tr.expand_slot(0, _delta_left_expansion(n), (monomial_key_mul, form_key_mul))
        bicomodule.record(inputs, lhs, rhs)
        counit_leg.record(inputs, form_slot_to_form(tr.contract_slot(1, _counit_slot), n), u)
        counit_leg.record(inputs, form_slot_to_form(tl.contract_slot(0, _counit_slot), n), u)

    relation = report.new("coaction-relation: d(x_i dx_j) = eta(e_i,e_j) d(dx_j) d(x_i)")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            factor = commutation_factor(basis_vector(n, i), basis_vector(n, j))
            x_i = Element.generator(n, i)
            dx_j = Form.dx(n, j)
            relation.record(
                f"right i={i} j={j}",
                delta_right(x_i * dx_j),
                (delta_right(dx_j) * delta_right(Form.from_element(x_i))).scale(factor))
            relation.record(
                f"left i={i} j={j}",
                delta_left(x_i * dx_j),
                (delta_left(dx_j) * delta_left(Form.from_element(x_i))).scale(factor))

    bimodule_rule = report.new("coaction-bimodule: delta(a p b) = D(a) delta(p) D(b)")
    for _ in range(samples // 2):
        a = Element.monomial(n, random_exponent(rng, n, -2, 2, 2))
        b = Element.monomial(n, random_exponent(rng, n, -2, 2, 2))
        j = rng.randint(1, n)
        p = Form.dx(n, j)
        inputs = f"a={a} j={j} b={b}"
        lhs = delta_right(a * p * b)
        rhs = delta_right(Form.from_element(a)) * delta_right(p) * delta_right(Form.from_element(b))
        bimodule_rule.record("right " + inputs, lhs, rhs)
        lhs = delta_left(a * p * b)
        rhs = delta_left(Form.from_element(a)) * delta_left(p) * delta_left(Form.from_element(b))
        bimodule_rule.record("left " + inputs, lhs, rhs)

    compat = report.new("coaction-of-d: dR(d(f)) = (d x id)D(f) and dL(d(f)) = (id x d)D(f)")
    for _ in range(samples):
        f = random_element(rng, n, 2)
        t = coproduct(f)
        inputs = f"f={f}"
        compat.record("right " + inputs, delta_right(exterior_d(f)),
                      t.expand_slot(0, _d_key_expansion(n), (form_key_mul,)))
        compat.record("left " + inputs, delta_left(exterior_d(f)),
                      t.expand_slot(1, _d_key_expansion(n), (form_key_mul,)))

    degree_zero = report.new("coaction-on-degree-0: both coactions act as the coproduct")
    for _ in range(samples // 2):
        f = random_element(rng, n, 2)
        t = coproduct(f)
        expected_right = Tensor((form_key_mul, monomial_key_mul),
                                {(((), a), b): c for (a, b), c in t.terms.items()})
        expected_left = Tensor((monomial_key_mul, form_key_mul),
                               {(a, ((), b)): c for (a, b), c in t.terms.items()})
        degree_zero.record(f"f={f}", delta_right(f), expected_right)
        degree_zero.record(f"f={f}", delta_left(f), expected_left)
    return report
