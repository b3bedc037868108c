"""Print the simulated visibility at the experimental operating points (N=10, 1550 nm, 0-2 ns)."""
from mmdelay.sweeps import SweepConfig, SweepKind, run_delay_sweep
from mmdelay.units import DelaySpec, DelayUnit

delays = tuple(DelaySpec(k * 0.25e-9, DelayUnit.SECONDS) for k in range(9))
cfg = SweepConfig(SweepKind.DELAY_TIME, n_highest=(10,), waists=(1.3e-3, 1.85e-3), delays=delays,
                  trials=20, master_seed=2024)
for w0 in cfg.waists:
    curve = run_delay_sweep(cfg, 10, w0)
    print(curve.label)
    for t, m, s in zip(curve.abscissa, curve.mean, curve.stderr):
        print(f"  {t:5.2f} ns  V = {m:.4f} +- {s:.4f}")
