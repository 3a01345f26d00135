"""Audit a batch of random categories for the four completeness notions.

Run with ``python3 demos/completeness_audit.py``.
"""
from collections import Counter

from fuzzyorder import GODEL, LUKASIEWICZ, PRODUCT, completeness
from fuzzyorder.generate import random_category

tally = Counter()
for t in (GODEL, LUKASIEWICZ, PRODUCT):
    for seed in range(25):
        c = random_category(t, 4, seed)
        for mode in ("yoneda", "bi", "cauchy", "flat"):
            rep = completeness(c, mode, budget=100, seed=seed)
            tally[str(t), mode, rep.complete, rep.exact] += 1

print(f"{'t-norm':<12}{'mode':<8}{'answer':<9}{'exact':<7}count")
for (name, mode, answer, exact), n in sorted(tally.items()):
    print(f"{name:<12}{mode:<8}{answer:<9}{exact!s:<7}{n}")
