"""
CORPUS - Seeded Band-Limited Test Signals
Sums of shifted, modulated Gaussian atoms for the property suites, and
narrow-band signals built directly in the F_α domain.
"""

import math
import os
from typing import List, Optional, Sequence

import numpy as np
import pandas as pd

import config
from frft_engine import frft
from models import FrftMethod, Signal, UniformGrid
from signal_core import lp_norm, make_signal, symmetric_grid
from utils.csv_io import write_json, write_signal_csv


def corpus_grid() -> UniformGrid:
    return symmetric_grid(config.CORPUS_HALF_WIDTH, config.CORPUS_STEP)


def draw_atoms(rng: np.random.Generator, atoms: int = config.CORPUS_ATOMS) -> List[dict]:
    """Random atom parameters: amplitude, time shift, modulation, width"""
    out = []
    for _ in range(atoms):
        out.append({
            "amplitude": complex(rng.normal(), rng.normal()),
            "shift": float(rng.uniform(-config.CORPUS_MAX_SHIFT, config.CORPUS_MAX_SHIFT)),
            "modulation": float(rng.uniform(-config.CORPUS_MAX_SHIFT, config.CORPUS_MAX_SHIFT)),
            "width": float(rng.uniform(*config.CORPUS_WIDTH_RANGE)),
        })
    return out


def atom_profile(atoms: Sequence[dict]):
    """Pointwise generator Σ a e^{2πiνt} e^{-π((t-τ)/w)²}"""
    frozen = [dict(a) for a in atoms]

    def profile(t):
        t = np.asarray(t, dtype=float)
        total = np.zeros(t.shape, dtype=complex)
        for a in frozen:
            envelope = np.exp(-math.pi * ((t - a["shift"]) / a["width"]) ** 2)
            total += a["amplitude"] * np.exp(2j * math.pi * a["modulation"] * t) * envelope
        return total

    return profile


def generate_corpus(
    size: int = config.CORPUS_SIZE,
    grid: Optional[UniformGrid] = None,
    seed: int = config.RANDOM_SEED,
) -> List[Signal]:
    """`size` signals, identical for identical seeds; each keeps its profile for exact resampling"""
    grid = grid if grid is not None else corpus_grid()
    rng = np.random.default_rng(seed)
    return [make_signal(grid, atom_profile(draw_atoms(rng))) for _ in range(size)]


def narrow_band_signal(
    alpha: float,
    centers: Sequence[float],
    width: float,
    time_grid: UniformGrid,
    freq_grid: UniformGrid,
) -> Signal:
    """
    Signal whose F_α is a sum of Gaussian bumps exp(-π((x - c)/width)²),
    synthesized by F_{-α} from freq_grid onto time_grid.
    """
    x = freq_grid.points
    bumps = np.zeros(freq_grid.count, dtype=complex)
    for c in centers:
        bumps += np.exp(-math.pi * ((x - c) / width) ** 2)
    spectrum = Signal(grid=freq_grid, samples=bumps)
    return frft(spectrum, -alpha, time_grid, FrftMethod.FAST)


def corpus_statistics(signals: Sequence[Signal]) -> pd.DataFrame:
    """Per-signal L¹, L², L∞ norms and boundary magnitude"""
    rows = []
    for i, f in enumerate(signals):
        rows.append({
            "signal": i,
            "l1": lp_norm(f, 1),
            "l2": lp_norm(f, 2),
            "linf": lp_norm(f, math.inf),
            "boundary": float(max(abs(f.samples[0]), abs(f.samples[-1]))),
        })
    return pd.DataFrame(rows)


def save_corpus(signals: Sequence[Signal], output_dir: str, seed: int) -> List[str]:
    """One t,re,im file per signal plus manifest.json"""
    paths = []
    for i, f in enumerate(signals):
        paths.append(write_signal_csv(f, os.path.join(output_dir, f"signal_{i:02d}.csv")))
    manifest = {
        "seed": seed,
        "grid": signals[0].grid.spec() if signals else None,
        "atoms_per_signal": config.CORPUS_ATOMS,
        "files": [os.path.basename(p) for p in paths],
    }
    paths.append(write_json(manifest, os.path.join(output_dir, "manifest.json")))
    return paths


def main(output_dir: str = os.path.join(config.OUTPUT_DIR, "corpus"), seed: int = config.RANDOM_SEED):
    """Main execution function"""
    print("Starting CORPUS generator...")
    print(f"Generating {config.CORPUS_SIZE} signals on {corpus_grid().spec()} (seed {seed})\n")

    print("Step 1: Drawing Gaussian atoms...")
    signals = generate_corpus(seed=seed)
    print(f"  Signals generated: {len(signals)}")

    print("\nStep 2: Corpus statistics...")
    stats = corpus_statistics(signals)
    for row in stats.itertuples():
        print(f"  signal {row.signal:02d}: L1 {row.l1:8.4f}  L2 {row.l2:8.4f}  boundary {row.boundary:.2e}")

    print("\nStep 3: Saving data...")
    paths = save_corpus(signals, output_dir, seed)
    print(f"  {len(paths) - 1} signal files and manifest saved to: {output_dir}")

    print(f"\n{'=' * 60}")
    print("SUCCESS! Corpus generation complete.")
    print(f"{'=' * 60}\n")
    return paths


if __name__ == "__main__":
    main()
