"""
Seeded verification campaigns
=============================

Each campaign draws random instances satisfying a theorem's hypotheses and
checks the conclusion with exact predicates.  Reports are reproducible.
"""

import json

from hypmesh.campaigns import TheoremId, TrialConfig, run_campaign

for tid in (TheoremId.IDENTITY_THETA_REP, TheoremId.LEMMA_II, TheoremId.THETA_LMESH, TheoremId.RIESZ):
    rep = run_campaign(TrialConfig(tid, 50, 2, 6, seed=2026))
    print(f"{tid.value:20s} passed {rep.passed:3d}  failed {rep.failed}  vacuous {rep.vacuous}")

# same seed, same bytes (timing aside)
cfg = TrialConfig(TheoremId.SCHUR_SZEGO_LMESH, 20, 2, 5, seed=7)
a, b = run_campaign(cfg), run_campaign(cfg)
print("reproducible:", a.to_json(include_time=False) == b.to_json(include_time=False))
print(json.dumps(json.loads(a.to_json(include_time=False))["config"], indent=2))
