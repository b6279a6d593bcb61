"""Coproduct, counit, and antipode for both carriers, with axiom checkers.

Coordinate algebra (x1 invertible, i >= 2):

    D(x1^(+-1)) = x1^(+-1) (x) x1^(+-1)
    D(x_i) = x_i (x) x1 + x1 (x) x_i
    e(x1) = 1, e(x_i) = 0
    S(x1) = x1^-1, S(x_i) = -x1^-1 x_i x1^-1

Operator algebra:

    D(s_i) = s_i (x) s_i
    D(d_i) = d_i (x) 1 + s_i (x) d_i
    e(s_i) = 1, e(d_i) = 0
    S(s_i) = s_i^-1, S(d_i) = -s_i^-1 d_i

D and e extend multiplicatively over PBW/normal-form words, S as an
anti-homomorphism by reversing the generator word.  Tensor products carry the
usual componentwise multiplication (a x b)(c x d) = ac x bd.  The coordinate
coproduct is cocommutative; the operator coproduct is not, and the checker
asserts that failure exactly.
"""

from __future__ import annotations

from functools import lru_cache

from .bicharacter import basis_vector, commutation_factor, vector_add, vector_neg
from .operators import Operator, word_key_mul, word_str, words_up_to
from .qspace import Element, monomial_key_mul, monomial_str
from .report import CheckReport
from .scalar import LaurentScalar, format_term, join_terms
from .tensors import Tensor


def aq_tensor(n: int, slots: int = 2, terms=None) -> Tensor:
    return Tensor((monomial_key_mul,) * slots, terms)


def dq_tensor(n: int, slots: int = 2, terms=None) -> Tensor:
    return Tensor((word_key_mul,) * slots, terms)


def _zero_key(n: int):
    return (0,) * n


# ---------------------------------------------------------------------------
# Coordinate algebra side

@lru_cache(maxsize=None)
def _monomial_coproduct(n: int, alpha) -> Tensor:
    zero = _zero_key(n)
    out = aq_tensor(n, 2, {(zero, zero): 1})
    a1 = alpha[0]
    if a1:
        step = 1 if a1 > 0 else -1
        x1_like = (step,) + (0,) * (n - 1)
        grouplike = aq_tensor(n, 2, {(x1_like, x1_like): 1})
        for _ in range(abs(a1)):
            out = out * grouplike
    for i in range(2, n + 1):
        e_i = basis_vector(n, i)
        e_1 = basis_vector(n, 1)
        primitive_like = aq_tensor(n, 2, {(e_i, e_1): 1, (e_1, e_i): 1})
        for _ in range(alpha[i - 1]):
            out = out * primitive_like
    return out


def _counit_key_aq(alpha) -> LaurentScalar:
    if any(alpha[1:]):
        return LaurentScalar.zero()
    return LaurentScalar.one()


@lru_cache(maxsize=None)
def _monomial_antipode(n: int, alpha) -> Element:
    # Reverse the generator word: S(x^a) = S(xn)^an ... S(x2)^a2 x1^(-a1).
    x1inv = Element.x1_inverse(n)
    out = Element.one(n)
    for i in range(n, 1, -1):
        s_xi = -(x1inv * Element.generator(n, i) * x1inv)
        for _ in range(alpha[i - 1]):
            out = out * s_xi
    return out * Element.monomial(n, (-alpha[0],) + (0,) * (n - 1))


def _antipode_key_aq(n: int):
    def fn(alpha):
        single = _monomial_antipode(n, alpha).single_term()
        key, coeff = single
        return coeff, key
    return fn


# ---------------------------------------------------------------------------
# Operator algebra side

@lru_cache(maxsize=None)
def _word_coproduct(n: int, gamma, beta) -> Tensor:
    zero = _zero_key(n)
    unit = ((zero, zero), (zero, zero))
    out = dq_tensor(n, 2, {unit: 1})
    for i in range(1, n + 1):
        g = gamma[i - 1]
        if g:
            key = (tuple(g if k == i - 1 else 0 for k in range(n)), zero)
            out = out * dq_tensor(n, 2, {(key, key): 1})
    for i in range(1, n + 1):
        e_i = basis_vector(n, i)
        d_key = (zero, e_i)
        s_key = (e_i, zero)
        unit_key = (zero, zero)
        primitive_like = dq_tensor(n, 2, {(d_key, unit_key): 1, (s_key, d_key): 1})
        for _ in range(beta[i - 1]):
            out = out * primitive_like
    return out


def _counit_key_dq(key) -> LaurentScalar:
    _, beta = key
    if any(beta):
        return LaurentScalar.zero()
    return LaurentScalar.one()


@lru_cache(maxsize=None)
def _word_antipode(n: int, gamma, beta) -> Operator:
    out = Operator.one(n)
    for i in range(n, 0, -1):
        e_i = basis_vector(n, i)
        s_di = Operator.word(n, vector_neg(e_i), e_i, -1)  # S(d_i) = -s_i^-1 d_i
        for _ in range(beta[i - 1]):
            out = out * s_di
    return out * Operator.sigma_word(n, vector_neg(gamma))


def _antipode_key_dq(n: int):
    def fn(key):
        gamma, beta = key
        single = _word_antipode(n, gamma, beta).single_term()
        word, coeff = single
        return coeff, word
    return fn


# ---------------------------------------------------------------------------
# Public entry points (dispatch on the carrier)

def coproduct(value) -> Tensor:
    """Coproduct of an Element or Operator, as a 2-slot tensor."""
    if isinstance(value, Element):
        out = aq_tensor(value.n, 2)
        for alpha, coeff in value.terms.items():
            out = out + _monomial_coproduct(value.n, alpha).scale(coeff)
        return out
    if isinstance(value, Operator):
        out = dq_tensor(value.n, 2)
        for (gamma, beta), coeff in value.terms.items():
            out = out + _word_coproduct(value.n, gamma, beta).scale(coeff)
        return out
    raise TypeError(f"coproduct expects Element or Operator, got {type(value).__name__}")


def counit(value) -> LaurentScalar:
    if isinstance(value, Element):
        total = LaurentScalar.zero()
        for alpha, coeff in value.terms.items():
            total = total + coeff * _counit_key_aq(alpha)
        return total
    if isinstance(value, Operator):
        total = LaurentScalar.zero()
        for key, coeff in value.terms.items():
            total = total + coeff * _counit_key_dq(key)
        return total
    raise TypeError(f"counit expects Element or Operator, got {type(value).__name__}")


def antipode(value):
    if isinstance(value, Element):
        out = Element.zero(value.n)
        for alpha, coeff in value.terms.items():
            out = out + _monomial_antipode(value.n, alpha).scale(coeff)
        return out
    if isinstance(value, Operator):
        out = Operator.zero(value.n)
        for (gamma, beta), coeff in value.terms.items():
            out = out + _word_antipode(value.n, gamma, beta).scale(coeff)
        return out
    raise TypeError(f"antipode expects Element or Operator, got {type(value).__name__}")


def tau(t: Tensor) -> Tensor:
    """The flip a (x) b -> b (x) a."""
    return t.swap_slots(0, 1)


# ---------------------------------------------------------------------------
# Conversions and rendering

def element_to_tensor1(f: Element) -> Tensor:
    return Tensor((monomial_key_mul,), {(alpha,): c for alpha, c in f.terms.items()})


def tensor1_to_element(t: Tensor, n: int) -> Element:
    return Element(n, {keys[0]: c for keys, c in t.terms.items()})


def operator_to_tensor1(u: Operator) -> Tensor:
    return Tensor((word_key_mul,), {(key,): c for key, c in u.terms.items()})


def tensor1_to_operator(t: Tensor, n: int) -> Operator:
    return Operator(n, {keys[0]: c for keys, c in t.terms.items()})


def _slot_str(kind: str, key) -> str:
    if kind == "aq":
        return monomial_str(key) or "1"
    if kind == "dq":
        return word_str(*key) or "1"
    raise ValueError(f"unknown slot kind {kind!r}")


def tensor_text(t: Tensor, kind: str) -> str:
    """Readable form of a 2-slot tensor, e.g. 'x2 (x) x1 + x1 (x) x2'."""
    parts = []
    for keys, coeff in t.sorted_terms():
        body = " (x) ".join(_slot_str(kind, key) for key in keys)
        parts.append(format_term(coeff, body))
    return join_terms(parts)


def _slot_json(kind: str, key):
    if kind == "aq":
        return {"alpha": list(key)}
    if kind == "dq":
        return {"gamma": list(key[0]), "beta": list(key[1])}
    raise ValueError(f"unknown slot kind {kind!r}")


def tensor_to_json(t: Tensor, kind: str, n: int):
    if t.slot_count != 2:
        raise ValueError("only 2-slot tensors have a documented schema")
    return {
        "n": n,
        "slots": [kind, kind],
        "terms": [
            {"left": _slot_json(kind, keys[0]), "right": _slot_json(kind, keys[1]),
             "coeff": coeff.to_json()["coeff"]}
            for keys, coeff in t.sorted_terms()
        ],
    }


def tensor_from_json(data) -> Tensor:
    kind = data["slots"][0]
    if kind == "aq":
        mul = monomial_key_mul
        def key_of(d):
            return tuple(d["alpha"])
    elif kind == "dq":
        mul = word_key_mul
        def key_of(d):
            return (tuple(d["gamma"]), tuple(d["beta"]))
    else:
        raise ValueError(f"unknown slot kind {kind!r}")
    terms = {}
    for term in data["terms"]:
        keys = (key_of(term["left"]), key_of(term["right"]))
        terms[keys] = LaurentScalar.from_json({"coeff": term["coeff"]})
    return Tensor((mul, mul), terms)


def apply_pair_tensor(t: Tensor, f: Element, g: Element) -> Element:
    """Act with a 2-slot operator tensor on f (x) g and multiply the legs."""
    n = f.n
    out = Element.zero(n)
    for (k1, k2), coeff in t.terms.items():
        left = Operator(n, {k1: 1}).apply(f)
        right = Operator(n, {k2: 1}).apply(g)
        out = out + (left * right).scale(coeff)
    return out


# ---------------------------------------------------------------------------
# Checkers

def _coproduct_expand_aq(n: int):
    def fn(alpha):
        return [(c, keys) for keys, c in _monomial_coproduct(n, alpha).terms.items()]
    return fn


def _coproduct_expand_dq(n: int):
    def fn(key):
        gamma, beta = key
        return [(c, keys) for keys, c in _word_coproduct(n, gamma, beta).terms.items()]
    return fn


def check_hopf_coordinate_algebra(n: int, monomials, pair_samples: int = 300,
                                  seed: int = 0) -> CheckReport:
    """Hopf axioms, cocommutativity, relation preservation, and the
    coalgebra anti-homomorphism law of S on the given monomial set."""
    import random

    rng = random.Random(f"{seed}:hopf-aqn:{n}")
    report = CheckReport(f"hopf-coordinate(n={n})")
    monomials = sorted(monomials)
    expand = _coproduct_expand_aq(n)
    antipode_key = _antipode_key_aq(n)

    coassoc = report.new("coassociativity: (D x id)D = (id x D)D")
    counit_law = report.new("counit: (e x id)D = id = (id x e)D")
    antipode_left = report.new("antipode-left: m(S x id)D = e(f) 1")
    antipode_right = report.new("antipode-right: m(id x S)D = e(f) 1")
    cocomm = report.new("cocommutativity: tau D = D")
    anti_coalg = report.new("S-coalgebra-antihom: tau (S x S) D = D S")
    counit_s = report.new("counit-of-antipode: e S = e")
    s_squared = report.new("antipode-involutive: S S = id")

    for alpha in monomials:
        f = Element.monomial(n, alpha)
        t = coproduct(f)
        inputs = f"alpha={list(alpha)}"
        coassoc.record(inputs, t.expand_slot(0, expand, (monomial_key_mul,) * 2),
                       t.expand_slot(1, expand, (monomial_key_mul,) * 2))
        counit_law.record(inputs, tensor1_to_element(t.contract_slot(0, _counit_key_aq), n), f)
        counit_law.record(inputs, tensor1_to_element(t.contract_slot(1, _counit_key_aq), n), f)
        eps_f = Element.one(n).scale(counit(f))
        antipode_left.record(inputs, tensor1_to_element(t.map_slot(0, antipode_key).merge_slots(0), n), eps_f)
        antipode_right.record(inputs, tensor1_to_element(t.map_slot(1, antipode_key).merge_slots(0), n), eps_f)
        cocomm.record(inputs, tau(t), t)
        anti_coalg.record(inputs, tau(t.map_slot(0, antipode_key).map_slot(1, antipode_key)),
                          coproduct(antipode(f)))
        counit_s.record(inputs, counit(antipode(f)), counit(f))
        s_squared.record(inputs, antipode(antipode(f)), f)

    relations = report.new("relation-preservation: D(x^u x^v) = eta(u,v) D(x^v) D(x^u)")
    pseudo_gens = [basis_vector(n, 1), vector_neg(basis_vector(n, 1))]
    pseudo_gens += [basis_vector(n, i) for i in range(2, n + 1)]
    for u in pseudo_gens:
        for v in pseudo_gens:
            fu, fv = Element.monomial(n, u), Element.monomial(n, v)
            factor = commutation_factor(u, v)
            inputs = f"u={list(u)} v={list(v)}"
            relations.record(inputs, coproduct(fu * fv),
                             (coproduct(fv) * coproduct(fu)).scale(factor))
            # same relation checked on the unmerged word: D(x^u)D(x^v)
            relations.record(inputs, coproduct(fu) * coproduct(fv),
                             (coproduct(fv) * coproduct(fu)).scale(factor))

    hom = report.new("coproduct-homomorphism: D(fg) = D(f)D(g)")
    counit_hom = report.new("counit-homomorphism: e(fg) = e(f)e(g)")
    anti_mul = report.new("antipode-antihomomorphism: S(fg) = S(g)S(f)")
    for _ in range(pair_samples):
        a = rng.choice(monomials)
        b = rng.choice(monomials)
        f, g = Element.monomial(n, a), Element.monomial(n, b)
        inputs = f"a={list(a)} b={list(b)}"
        hom.record(inputs, coproduct(f * g), coproduct(f) * coproduct(g))
        counit_hom.record(inputs, counit(f * g), counit(f) * counit(g))
        anti_mul.record(inputs, antipode(f * g), antipode(g) * antipode(f))
    return report


def check_hopf_operator_algebra(n: int, word_degree: int = 3, seed: int = 0) -> CheckReport:
    """Hopf axioms on all normal-form words up to the given degree, relation
    preservation under D, the anti-homomorphism law of S, and the exact
    non-cocommutativity witness."""
    if word_degree < 1:
        raise ValueError("word_degree must be >= 1")
    import random

    rng = random.Random(f"{seed}:dq-hopf:{n}")
    report = CheckReport(f"hopf-operator(n={n})")
    expand = _coproduct_expand_dq(n)
    antipode_key = _antipode_key_dq(n)

    coassoc = report.new("coassociativity: (D x id)D = (id x D)D")
    counit_law = report.new("counit: (e x id)D = id = (id x e)D")
    antipode_left = report.new("antipode-left: m(S x id)D = e(u) 1")
    antipode_right = report.new("antipode-right: m(id x S)D = e(u) 1")
    for gamma, beta in words_up_to(n, word_degree):
        u = Operator.word(n, gamma, beta)
        t = coproduct(u)
        inputs = f"gamma={list(gamma)} beta={list(beta)}"
        coassoc.record(inputs, t.expand_slot(0, expand, (word_key_mul,) * 2),
                       t.expand_slot(1, expand, (word_key_mul,) * 2))
        counit_law.record(inputs, tensor1_to_operator(t.contract_slot(0, _counit_key_dq), n), u)
        counit_law.record(inputs, tensor1_to_operator(t.contract_slot(1, _counit_key_dq), n), u)
        eps_u = Operator.one(n).scale(counit(u))
        antipode_left.record(inputs, tensor1_to_operator(t.map_slot(0, antipode_key).merge_slots(0), n), eps_u)
        antipode_right.record(inputs, tensor1_to_operator(t.map_slot(1, antipode_key).merge_slots(0), n), eps_u)

    relations = report.new("relation-preservation under D")
    rel_eps = report.new("relation-preservation under e")
    rel_s = report.new("relation-preservation under S (sides reversed)")
    for i in range(1, n + 1):
        e_i = basis_vector(n, i)
        d_i = Operator.partial(n, i)
        for j in range(1, n + 1):
            e_j = basis_vector(n, j)
            d_j = Operator.partial(n, j)
            eta_ij = commutation_factor(e_i, e_j)
            relations.record(f"d{i} d{j}", coproduct(d_i) * coproduct(d_j),
                             (coproduct(d_j) * coproduct(d_i)).scale(eta_ij))
            rel_eps.record(f"d{i} d{j}", counit(d_i) * counit(d_j),
                           counit(d_j) * counit(d_i) * eta_ij)
            rel_s.record(f"d{i} d{j}", antipode(d_j) * antipode(d_i),
                         (antipode(d_i) * antipode(d_j)).scale(eta_ij))
            for sign in (1, -1):
                a = tuple(sign * e for e in e_j)
                s_a = Operator.sigma_word(n, a)
                eta_ai = commutation_factor(a, e_i)
                relations.record(f"s{j}^{sign} d{i}", coproduct(s_a) * coproduct(d_i),
                                 (coproduct(d_i) * coproduct(s_a)).scale(eta_ai))
                rel_eps.record(f"s{j}^{sign} d{i}", counit(s_a) * counit(d_i),
                               counit(d_i) * counit(s_a) * eta_ai)
                rel_s.record(f"s{j}^{sign} d{i}", antipode(d_i) * antipode(s_a),
                             (antipode(s_a) * antipode(d_i)).scale(eta_ai))
                s_b = Operator.sigma_gen(n, i)
                merged = Operator.sigma_word(n, vector_add(a, e_i))
                relations.record(f"s{j}^{sign} s{i}",
                                 coproduct(s_a) * coproduct(s_b), coproduct(merged))
                relations.record(f"s{j}^{sign} s{i}",
                                 coproduct(s_a) * coproduct(s_b),
                                 coproduct(s_b) * coproduct(s_a))
                rel_eps.record(f"s{j}^{sign} s{i}", counit(s_a) * counit(s_b), counit(merged))
                rel_s.record(f"s{j}^{sign} s{i}", antipode(s_b) * antipode(s_a), antipode(merged))

    hom = report.new("coproduct-homomorphism: D(uv) = D(u)D(v)")
    anti_mul = report.new("antipode-antihomomorphism: S(uv) = S(v)S(u)")
    words = words_up_to(n, min(word_degree, 2))
    for _ in range(100):
        k1 = rng.choice(words)
        k2 = rng.choice(words)
        u, v = Operator.word(n, *k1), Operator.word(n, *k2)
        inputs = f"u={u} v={v}"
        hom.record(inputs, coproduct(u * v), coproduct(u) * coproduct(v))
        anti_mul.record(inputs, antipode(u * v), antipode(v) * antipode(u))

    noncocomm = report.new("non-cocommutativity: tau D(d_i) != D(d_i)")
    for i in range(1, n + 1):
        t = coproduct(Operator.partial(n, i))
        noncocomm.record_differ(f"i={i}", tau(t), t)
    return report


def check_module_algebra(n: int, samples: int = 200, seed: int = 0) -> CheckReport:
    """m(D(u)(f x g)) = u(fg) for every generator u of the operator algebra,
    with f a random monomial and g a random element."""
    import random

    from .qspace import random_element, random_exponent

    rng = random.Random(f"{seed}:module-algebra:{n}")
    report = CheckReport(f"module-algebra(n={n})")
    partial_case = report.new("module-algebra: m(D(d_i)(f x g)) = d_i(fg)")
    sigma_case = report.new("module-algebra: m(D(s_i)(f x g)) = s_i(fg) = s_i(f)s_i(g)")
    from .operators import sigma as apply_sigma

    for _ in range(samples):
        alpha = random_exponent(rng, n, -3, 4, 4)
        f = Element.monomial(n, alpha)
        g = random_element(rng, n)
        for i in range(1, n + 1):
            d_i = Operator.partial(n, i)
            lhs = apply_pair_tensor(coproduct(d_i), f, g)
            partial_case.record(f"i={i} f={f} g={g}", lhs, d_i.apply(f * g))
            s_i = Operator.sigma_gen(n, i)
            lhs = apply_pair_tensor(coproduct(s_i), f, g)
            e_i = basis_vector(n, i)
            rhs = apply_sigma(e_i, f * g)
            sigma_case.record(f"i={i} f={f} g={g}", lhs, rhs)
            sigma_case.record(f"i={i} f={f} g={g}", rhs,
                              apply_sigma(e_i, f) * apply_sigma(e_i, g))
    return report
