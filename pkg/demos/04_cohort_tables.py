"""Walkthrough: cohort experiment from phantoms to the comparison table.

Generates a small cohort, attaches MODEL predictions (cleaned ground
truth) and ATLAS predictions (best-atlas registration), and renders the
method comparison and timing tables.
"""

from pathlib import Path

from dsaterr import report
from dsaterr.core import View
from dsaterr.report import CohortManifest, ExperimentConfig
from dsaterr.synth import make_atlas_library, make_cohort

out = Path(__file__).parent / "out" / "cohort"
out.mkdir(parents=True, exist_ok=True)

# 6 patients, AP view, post-EVT only; occlusion sites are sampled to the
# cohort frequencies so strata stay realistic
cases = make_cohort(out / "data", n_patients=6, seed=321)
manifest = CohortManifest(cases=tuple(cases), base_dir=out / "data")
print(f"cohort: {len(manifest.cases)} patients, "
      f"{sum(len(c.acquisitions) for c in manifest.cases)} acquisitions")

# train/test split stays patient-atomic and stratified by occlusion site
split = report.split_cohort(manifest, {"TRAIN": 0.5, "TEST": 0.5}, seed=9)
print("splits:", dict(sorted(split.splits.items())))

# MODEL = ground truth through radius-3 cleanup; ATLAS = registration
library = make_atlas_library(n_entries=4, seed=480, views=(View.AP,))
manifest = report.add_model_predictions(manifest)
manifest = report.add_atlas_predictions(manifest, library)
report.save_manifest(manifest, out / "manifest.json")

res = report.run_table1(manifest, ExperimentConfig())
print()
print(report.render_table1(res))

timing = report.run_timing(manifest, library, max_cases=6)
print()
print(report.render_timing(timing))
