# Copyright 2026 The dense-egyptian Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Dense Egyptian-fraction constructions with exact certificates."""

from fractions import Fraction

from . import _core
from ._core import EgyptianError, density_upper_bound, rho, subset_sum_mod_p

__all__ = [
    "EgyptianError",
    "c_of_r",
    "construct",
    "density_upper_bound",
    "expand_odd",
    "family",
    "greedy_expand",
    "rho",
    "sieve_stats",
    "subset_sum_mod_p",
    "verify",
]


def _text(r):
    q = Fraction(r)
    return f"{q.numerator}/{q.denominator}"


def c_of_r(r):
    return _core.c_of_r(_text(r))


def expand_odd(r, max_term=0):
    return _core.expand_odd(_text(r), max_term)


def greedy_expand(r):
    return [int(t) for t in _core.greedy_expand(_text(r))]


def family(x, y, w, k, lam=0):
    return _core.family(x, y, w, k, _text(lam))


def sieve_stats(x, y, w, k, lam=0):
    return _core.sieve_stats(x, y, w, k, _text(lam))


def verify(r, S, x, eta=0.05):
    return _core.verify(_text(r), sorted(S), x, eta)


def construct(r, x, *, eta=0.05, k=0, epsilon=0.1, mode="strict", lambda_mode="adaptive",
              y_prime=None, x_prime=None):
    """Builds a certified representation of r with denominators at most x.

    Returns a dict with the five parts, the density, the certificate fields
    and the JSON certificate document.
    """
    out = _core.construct(_text(r), x, eta, k, epsilon, mode, lambda_mode, y_prime, x_prime)
    out["certificate"]["density"] = Fraction(out["certificate"]["density"])
    return out
