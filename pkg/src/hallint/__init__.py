"""Iterated elliptic integrals, identity verification, and Hall-device metrics.

The package is layered bottom-up:

* :mod:`hallint.elliptic` -- scalar special functions (AGM, K, K', E, F,
  nome, inversion of the period ratio K'/K);
* :mod:`hallint.quadrature` -- adaptive 1-D quadrature with declared endpoint
  singularities and Cauchy principal values;
* :mod:`hallint.integrals` -- the double integrals A(p,q) and I(alpha,beta)
  by a direct route and by K-kernel single-integral representations;
* :mod:`hallint.identities` -- computable residuals for the symmetry,
  reciprocity, Wronskian, and differential-operator identities;
* :mod:`hallint.device` -- Hall geometry factors and SNR for 3- and
  4-contact devices, plus recovery of parameters from circuit resistances;
* :mod:`hallint.cli` -- the ``hallint`` command line front end.
"""

from .errors import (
    AccuracyError,
    DivergenceError,
    DomainError,
    EvaluationError,
    HallintError,
)
from .elliptic import (
    EllipticPair,
    Parameter,
    agm,
    carlson_rf,
    complete_e,
    complete_k,
    complete_kprime,
    dk_dm,
    incomplete_f,
    invert_ratio,
    kprime_over_k,
    nome,
)

__version__ = "0.1.0"
