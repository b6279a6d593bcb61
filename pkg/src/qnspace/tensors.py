"""Sparse tensors over monomial-keyed algebras.

Every algebra in this package multiplies basis keys to a scalar times a
single key (or to zero), so a tensor over any combination of slots is just a
map {(k1, ..., km): LaurentScalar} with componentwise multiplication.  Each
slot carries its key-merge function; slot-local maps, expansions, and
contractions cover everything the coproduct/coaction checkers need.
"""

from __future__ import annotations

from .scalar import LaurentScalar


class Tensor:
    """k-slot tensor with one global Laurent coefficient per key tuple.

    slot_muls[i](a, b) -> (scalar, key) merges two keys of slot i, or returns
    None when the product is zero (wedge collisions).  Immutable by
    convention.
    """

    __slots__ = ("slot_muls", "terms")

    def __init__(self, slot_muls, terms=None):
        self.slot_muls = tuple(slot_muls)
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for keys, coeff in items:
                keys = tuple(keys)
                if len(keys) != len(self.slot_muls):
                    raise ValueError(f"expected {len(self.slot_muls)} slots, got {len(keys)}")
                if not isinstance(coeff, LaurentScalar):
                    coeff = LaurentScalar({0: coeff})
                if not coeff:
                    continue
                prev = clean.get(keys)
                coeff = coeff if prev is None else prev + coeff
                if coeff:
                    clean[keys] = coeff
                else:
                    clean.pop(keys, None)
        self.terms = clean

    @property
    def slot_count(self) -> int:
        return len(self.slot_muls)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.slot_count == other.slot_count and self.terms == other.terms

    def __add__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        if self.slot_count != other.slot_count:
            raise ValueError("slot count mismatch")
        out = dict(self.terms)
        for keys, coeff in other.terms.items():
            s = out.get(keys)
            s = coeff if s is None else s + coeff
            if s:
                out[keys] = s
            else:
                out.pop(keys, None)
        result = Tensor.__new__(Tensor)
        result.slot_muls, result.terms = self.slot_muls, out
        return result

    def __neg__(self):
        result = Tensor.__new__(Tensor)
        result.slot_muls = self.slot_muls
        result.terms = {keys: -c for keys, c in self.terms.items()}
        return result

    def __sub__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self + (-other)

    def scale(self, coeff) -> "Tensor":
        if not isinstance(coeff, LaurentScalar):
            coeff = LaurentScalar({0: coeff})
        return Tensor(self.slot_muls, {keys: c * coeff for keys, c in self.terms.items()})

    def __mul__(self, other):
        """Componentwise product: (a1 x ... x am)(b1 x ... x bm) = a1b1 x ... x ambm."""
        if not isinstance(other, Tensor):
            if isinstance(other, (int, LaurentScalar)) or type(other).__name__ == "Fraction":
                return self.scale(other)
            return NotImplemented
        if self.slot_count != other.slot_count:
            raise ValueError("slot count mismatch")
        out = {}
        for keys1, c1 in self.terms.items():
            for keys2, c2 in other.terms.items():
                coeff = c1 * c2
                merged = []
                dead = False
                for mul, a, b in zip(self.slot_muls, keys1, keys2):
                    res = mul(a, b)
                    if res is None:
                        dead = True
                        break
                    scalar, key = res
                    coeff = coeff * scalar
                    merged.append(key)
                if dead or not coeff:
                    continue
                keys = tuple(merged)
                s = out.get(keys)
                s = coeff if s is None else s + coeff
                if s:
                    out[keys] = s
                else:
                    out.pop(keys, None)
        result = Tensor.__new__(Tensor)
        result.slot_muls, result.terms = self.slot_muls, out
        return result

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentScalar)) or type(other).__name__ == "Fraction":
            return self.scale(other)
        return NotImplemented

    def map_slot(self, pos: int, fn) -> "Tensor":
        """Apply fn(key) -> (scalar, key) to slot pos of every term."""
        out = {}
        for keys, coeff in self.terms.items():
            scalar, key = fn(keys[pos])
            c = coeff * scalar
            if not c:
                continue
            new_keys = keys[:pos] + (key,) + keys[pos + 1:]
            s = out.get(new_keys)
            s = c if s is None else s + c
            if s:
                out[new_keys] = s
            else:
                out.pop(new_keys, None)
        result = Tensor.__new__(Tensor)
        result.slot_muls, result.terms = self.slot_muls, out
        return result

    def expand_slot(self, pos: int, fn, inserted_muls) -> "Tensor":
        """Replace slot pos via fn(key) -> iterable of (scalar, key_tuple).

        The replacement key tuples share the slot-merge functions given in
        inserted_muls (length may differ from 1, e.g. a coproduct expansion).
        """
        muls = self.slot_muls[:pos] + tuple(inserted_muls) + self.slot_muls[pos + 1:]
        out = {}
        for keys, coeff in self.terms.items():
            for scalar, new_part in fn(keys[pos]):
                c = coeff * scalar
                if not c:
                    continue
                new_keys = keys[:pos] + tuple(new_part) + keys[pos + 1:]
                s = out.get(new_keys)
                s = c if s is None else s + c
                if s:
                    out[new_keys] = s
                else:
                    out.pop(new_keys, None)
        result = Tensor.__new__(Tensor)
        result.slot_muls, result.terms = muls, out
        return result

    def contract_slot(self, pos: int, fn) -> "Tensor":
        """Drop slot pos, scaling each term by fn(key) -> LaurentScalar."""
        if self.slot_count < 2:
            raise ValueError("cannot contract the last slot")
        muls = self.slot_muls[:pos] + self.slot_muls[pos + 1:]
        out = {}
        for keys, coeff in self.terms.items():
            c = coeff * fn(keys[pos])
            if not c:
                continue
            new_keys = keys[:pos] + keys[pos + 1:]
            s = out.get(new_keys)
            s = c if s is None else s + c
            if s:
                out[new_keys] = s
            else:
                out.pop(new_keys, None)
        result = Tensor.__new__(Tensor)
        result.slot_muls, result.terms = muls, out
        return result

    def merge_slots(self, pos: int) -> "Tensor":
        """Multiply slots pos and pos+1 together (they must share a slot kind)."""
        if pos + 1 >= self.slot_count:
            raise ValueError("merge_slots needs two adjacent slots")
        mul = self.slot_muls[pos]
        muls = self.slot_muls[:pos + 1] + self.slot_muls[pos + 2:]
        out = {}
        for keys, coeff in self.terms.items():
            res = mul(keys[pos], keys[pos + 1])
            if res is None:
                continue
            scalar, key = res
            c = coeff * scalar
            if not c:
                continue
            new_keys = keys[:pos] + (key,) + keys[pos + 2:]
            s = out.get(new_keys)
            s = c if s is None else s + c
            if s:
                out[new_keys] = s
            else:
                out.pop(new_keys, None)
        result = Tensor.__new__(Tensor)
        result.slot_muls, result.terms = muls, out
        return result

    def swap_slots(self, i: int, j: int) -> "Tensor":
        """The flip map on slots i and j (slot kinds must match)."""
        muls = list(self.slot_muls)
        muls[i], muls[j] = muls[j], muls[i]
        out = {}
        for keys, coeff in self.terms.items():
            ks = list(keys)
            ks[i], ks[j] = ks[j], ks[i]
            out[tuple(ks)] = coeff
        result = Tensor.__new__(Tensor)
        result.slot_muls, result.terms = tuple(muls), out
        return result

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        body = " + ".join(f"{coeff} * {keys}" for keys, coeff in self.sorted_terms())
        return f"Tensor({body or '0'})"
