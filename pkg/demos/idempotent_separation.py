"""Two objects, one idempotent, and a Cauchy weight that no net generates.

Run with ``python3 demos/idempotent_separation.py``.
"""
import numpy as np

from fuzzyorder import (GODEL, TNorm, check_flat, completeness, compose_cw, compose_wc,
                        idempotent_counterexample, is_cauchy, is_forward_cauchy_weight, supremum)

# Goedel first: every truth value is idempotent
c, phi, psi = idempotent_counterexample(GODEL, 0.5, 0.7)
print("hom =")
print(c.hom)
print("types =", c.types)
print("phi =", phi.values, "of type", phi.wtype)

# psi is a left adjoint to phi: the round trip reaches the type, and the
# reverse composite stays below the hom
print("phi o psi =", compose_wc(phi, psi), ">= type", phi.wtype)
print("psi o phi <= hom:", compose_cw(psi, phi).leq(c.hom))
print("Cauchy:", is_cauchy(phi))
print("forward Cauchy:", is_forward_cauchy_weight(phi))
print("flat:", check_flat(phi).status.value)
print("supremum:", supremum(phi) or "none")

# so the category is Yoneda complete but not Cauchy complete
for mode in ("yoneda", "cauchy"):
    rep = completeness(c, mode, [phi])
    print(f"{mode:>7} complete: {rep.complete}  (exact={rep.exact})")

# same picture on an ordinal sum, with 0.5 the seam between the pieces
luk_prod = TNorm.ordinal_sum([(0.0, 0.5, "lukasiewicz"), (0.5, 1.0, "product")])
c2, phi2, _ = idempotent_counterexample(luk_prod, 0.5, 0.7)
print()
print(luk_prod, "is 0.5 idempotent:", luk_prod.is_idempotent(0.5))
print("Cauchy:", is_cauchy(phi2), " forward Cauchy:", is_forward_cauchy_weight(phi2))
print("isolated elements:", c2.isolated())
np.testing.assert_allclose(phi2.values, phi.values)
