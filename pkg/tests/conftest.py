import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from qsp.qfield import LaurentPoly, Scalar, iota, mu, q

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("QSP_HYPOTHESIS_EXAMPLES", "25")),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

small_ints = st.integers(min_value=-3, max_value=3)


@st.composite
def laurent_scalars(draw, with_mu=False, with_iota=False, max_terms=3):
    """Random Laurent polynomials in q (optionally mu and i) with small integer coefficients."""
    out = Scalar(0)
    for _ in range(draw(st.integers(0, max_terms))):
        c = draw(st.integers(-4, 4))
        term = Scalar(c) * q(draw(small_ints))
        if with_mu:
            term = term * mu(draw(st.integers(-1, 1)))
        if with_iota and draw(st.booleans()):
            term = term * iota()
        out = out + term
    return out


@st.composite
def scalars(draw, with_mu=False, with_iota=False):
    """Random fractions of Laurent polynomials with a nonzero denominator."""
    num = draw(laurent_scalars(with_mu=with_mu, with_iota=with_iota))
    den = draw(laurent_scalars(with_mu=with_mu, with_iota=with_iota).filter(bool))
    return num / den
