# %% [markdown]
# # Arrival time against swarm size
#
# Five replicates per size. At the default separation radius nothing
# arrives, so the second cell sweeps the radius to show where the dynamics
# change character. This takes a couple of minutes.

# %%
from swarmnet import SwarmConfig
from swarmnet.experiment import run_experiment

def show(summary):
    for a in summary.aggregates:
        ov = "-" if a.overhead_pct is None else f"{a.overhead_pct:5.1f}%"
        print(f"  n={a.n:<3} arrived {a.arrived}/{a.arrived + a.censored}  overhead {ov}")

print("default sep_radius = 100")
show(run_experiment(SwarmConfig(), [4, 8, 12], 5, seed_base=0, workers=4))

# %%
for sep in (1.0, 2.0, 3.0, 5.0, 10.0):
    print(f"sep_radius = {sep}")
    show(run_experiment(SwarmConfig(sep_radius=sep), [4, 8, 12], 5, seed_base=0, workers=4))
