"""
Thin wrapper around `scipy.integrate.quad` reporting convergence instead of warning about it.
"""
from typing import Callable, Sequence

from pydantic import BaseModel, Field
from scipy.integrate import quad


class QuadratureResult(BaseModel, frozen=True):
    value: float = Field(description="Integral estimate")
    abserr: float = Field(description="Estimated absolute error")
    converged: bool = Field(description="False if QUADPACK reported a problem")
    message: str | None = Field(default=None, description="QUADPACK message when not converged")


def adaptive_quad(func: Callable[[float], float],
                  a: float,
                  b: float,
                  epsabs: float,
                  epsrel: float,
                  limit: int = 200,
                  points: Sequence[float] | None = None) -> QuadratureResult:
    """
    Adaptive Gauss-Kronrod quadrature of `func` on [a, b].
    `points` are interior break points where the integrand changes scale.
    """
    points = sorted(p for p in (points or ()) if a < p < b) or None
    # With full_output, a fourth element (the message) is only returned on failure
    output = quad(func, a, b, epsabs=epsabs, epsrel=epsrel, limit=limit, points=points, full_output=1)
    value, abserr = float(output[0]), float(output[1])
    message = output[3] if len(output) > 3 else None
    return QuadratureResult(value=value, abserr=abserr, converged=message is None, message=message)
