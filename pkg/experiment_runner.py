"""
FRFT-LAB Experiment Runner
Runs damped-inversion experiments end to end: build signals, recover along an
epsilon schedule, write per-epsilon signals, the error table and a run summary.
"""

import os
import time
from typing import Dict, List, Optional, Sequence

import pandas as pd

import config
from convolve_means import recover
from models import EpsilonSchedule, MeanKind, RecoveryRow, Signal, UniformGrid
from reference_signals import adjudicate_chirp_u, chirp_u, chirp_u_frft_derived
from signal_core import make_signal, staggered_grid
from utils.csv_io import write_json, write_signal_csv, write_table


def recovery_file_name(eps: float) -> str:
    return f"recover_eps{eps!r}.csv"


def recovery_table(rows: Sequence[RecoveryRow]) -> pd.DataFrame:
    return pd.DataFrame(
        [{"eps": r.eps, "heat_parameter": r.heat_parameter, "l1_error": r.l1_error} for r in rows],
        columns=["eps", "heat_parameter", "l1_error"],
    )


def errors_decreasing(rows: Sequence[RecoveryRow]) -> bool:
    errors = [r.l1_error for r in rows]
    if any(e is None for e in errors):
        return False
    return all(b < a for a, b in zip(errors, errors[1:]))


class ExperimentRunner:
    """
    Inversion pipeline: Transform → Recover → Save → Summarize
    """

    def __init__(self, output_dir: str = config.OUTPUT_DIR, run_config: Optional[dict] = None):
        self.output_dir = output_dir
        self.run_config = run_config or {}
        self.rows: List[RecoveryRow] = []
        self.files: List[str] = []
        self.extra: dict = {}
        self.signals: Dict[str, Signal] = {}

    def run_recovery(
        self,
        transformed: Signal,
        alpha: float,
        kind: MeanKind,
        schedule: EpsilonSchedule,
        out: UniformGrid,
        reference: Optional[Signal] = None,
    ) -> List[RecoveryRow]:
        """Recover from sampled F_α f at every epsilon and save the results"""
        start_time = time.time()

        print("=" * 60)
        print("FRFT-LAB RECOVERY")
        print("=" * 60)
        print()
        print(f"📁 Transform samples: {transformed.grid.spec()}")
        print(f"   Order alpha = {alpha:.12g}, mean = {MeanKind(kind).value}")
        print(f"   Schedule: {', '.join(repr(e) for e in schedule.values)}\n")

        self.rows = recover(transformed, alpha, kind, schedule, out, reference)
        for row in self.rows:
            line = f"   ✓ eps = {row.eps!r}"
            if row.l1_error is not None:
                line += f"  L1 error {row.l1_error:.6e}"
            print(line)

        print(f"\n💾 Saving results...")
        self._save_results()
        print(f"   ✓ Complete in {time.time() - start_time:.1f}s\n")
        self._display_summary()
        return self.rows

    def run_chirp_demo(self) -> List[RecoveryRow]:
        """
        The singular chirp u at α = π/4: adjudicate the closed forms, sample
        the canonical transform, Abel-recover along DEFAULT_EPS_SCHEDULE and
        compare against u on a staggered time grid.
        """
        alpha = config.CHIRP_U_ALPHA
        print("🔍 Adjudicating the chirp transform against the graded oracle...")
        report = adjudicate_chirp_u()
        print(f"   derived form max error      {report.max_error_derived:.3e}")
        print(f"   stated form (integral C)    {report.max_error_integral_series:.3e}")
        print(f"   stated form (printed C)     {report.max_error_printed_series:.3e}")
        if report.erratum_candidate:
            print("   ⚠️  Stated closed form disagrees with the oracle; using the derived form")
        print()
        self.extra["chirp_u_adjudication"] = report.model_dump()

        time_grid = staggered_grid(config.DEMO_TIME_HALF_WIDTH, config.DEMO_TIME_STEP)
        freq_grid = staggered_grid(config.DEMO_FREQ_HALF_WIDTH, config.DEMO_FREQ_STEP)
        transformed = make_signal(freq_grid, chirp_u_frft_derived)
        reference = make_signal(time_grid, chirp_u)
        self.signals = {config.CHIRP_U_FILE: reference, config.CHIRP_U_FRFT_FILE: transformed}
        schedule = EpsilonSchedule(values=config.DEFAULT_EPS_SCHEDULE)
        return self.run_recovery(transformed, alpha, MeanKind.ABEL, schedule, time_grid, reference)

    def _save_results(self):
        """Demo input signals, per-epsilon signals, the error table and run_summary.json"""
        self.files = []
        for name, signal in self.signals.items():
            self.files.append(write_signal_csv(signal, os.path.join(self.output_dir, name)))
        for row in self.rows:
            path = os.path.join(self.output_dir, recovery_file_name(row.eps))
            self.files.append(write_signal_csv(row.signal, path))

        table_path = os.path.join(self.output_dir, config.RECOVERY_TABLE_FILE)
        self.files.append(write_table(recovery_table(self.rows), table_path))

        summary = {
            "config": self.run_config,
            "errors_decreasing": errors_decreasing(self.rows),
            "files": [os.path.basename(p) for p in self.files],
        }
        summary.update(self.extra)
        self.files.append(write_json(summary, os.path.join(self.output_dir, config.RUN_SUMMARY_FILE)))

    def _display_summary(self):
        print("=" * 60)
        print("RECOVERY COMPLETE")
        print("=" * 60)

        print(f"\n📊 Summary:")
        print(f"   Epsilon values: {len(self.rows)}")
        if self.rows and self.rows[0].l1_error is not None:
            trend = "decreasing" if errors_decreasing(self.rows) else "NOT decreasing"
            print(f"   L1 errors {trend} along the schedule")

        print(f"\n💾 Results saved to:")
        for path in self.files:
            print(f"   {path}")


def main():
    """Main execution"""
    runner = ExperimentRunner()
    runner.run_chirp_demo()


if __name__ == "__main__":
    main()
