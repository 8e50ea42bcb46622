"""Parsing of the descriptor strings used by the CLI, service, and
certificates: fields "gf(9)" or "gf(3^2)", rings "m2:gf(3)" / "dual:gf(2)"
/ "prod2:gf(3)" / "ut2:gf(2)", automorphisms "frob^i" / "id", and
representations "natural" / "regular" / "basis:frob^i"."""

from __future__ import annotations

import re

from .errors import DescriptorError
from .fields import FiniteField, is_prime, make_field
from .rings import (FiniteRing, dual_numbers, matrix_ring, product_ring,
                    upper_triangular)

_FIELD_RE = re.compile(r"^gf\((\d+)(?:\^(\d+))?\)$")
_RING_RE = re.compile(r"^(m\d+|dual|prod\d+|ut2):(.+)$")
_FROB_RE = re.compile(r"^frob\^(\d+)$")


def parse_field(text: str) -> FiniteField:
    m = _FIELD_RE.match(text.strip().lower())
    if not m:
        raise DescriptorError(f"invalid field descriptor {text!r}")
    base = int(m.group(1))
    if m.group(2) is not None:
        p, n = base, int(m.group(2))
        if not is_prime(p):
            raise DescriptorError(f"{p} is not prime in {text!r}")
    else:
        p, n = _factor_prime_power(base, text)
    try:
        return make_field(p, n)
    except Exception as exc:  # cap errors surface with the descriptor
        raise type(exc)(f"{text!r}: {exc}") from None


def _factor_prime_power(q, text):
    if q < 2:
        raise DescriptorError(f"field order must be >= 2 in {text!r}")
    p = 2
    while p * p <= q:
        if q % p == 0:
            n = 0
            m = q
            while m % p == 0:
                m //= p
                n += 1
            if m != 1:
                raise DescriptorError(f"{q} is not a prime power in {text!r}")
            return p, n
        p += 1
    return q, 1  # q itself is prime


def parse_ring(text: str) -> FiniteRing:
    t = text.strip().lower()
    m = _RING_RE.match(t)
    if not m:
        # a bare field descriptor denotes the field viewed as a ring
        if _FIELD_RE.match(t):
            return matrix_ring(1, parse_field(t))
        raise DescriptorError(f"invalid ring descriptor {text!r}")
    kind, field_part = m.groups()
    K = parse_field(field_part)
    if kind.startswith("m"):
        return matrix_ring(int(kind[1:]), K)
    if kind == "dual":
        return dual_numbers(K)
    if kind.startswith("prod"):
        return product_ring(K, int(kind[4:]))
    if kind == "ut2":
        return upper_triangular(K)
    raise DescriptorError(f"invalid ring descriptor {text!r}")


def parse_automorphism(K: FiniteField, text: str):
    t = text.strip().lower()
    if t == "id":
        return K.frobenius(0)
    m = _FROB_RE.match(t)
    if not m:
        raise DescriptorError(f"invalid automorphism descriptor {text!r}")
    return K.frobenius(int(m.group(1)))


def parse_rep_descriptor(text: str):
    """Returns ("natural", None) / ("regular", None) / ("basis", power)."""
    t = text.strip().lower()
    if t in ("natural", "regular"):
        return (t, None)
    if t.startswith("basis:"):
        spec = t[len("basis:"):]
        if spec == "id":
            return ("basis", 0)
        m = _FROB_RE.match(spec)
        if not m:
            raise DescriptorError(f"invalid representation descriptor {text!r}")
        return ("basis", int(m.group(1)))
    raise DescriptorError(f"invalid representation descriptor {text!r}")
