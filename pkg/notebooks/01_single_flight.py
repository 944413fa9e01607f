# %% [markdown]
# # One flight, tick by tick
#
# Deploy eight UAVs around the launch point, fly, and look at what the
# trace records. Run it as a script or open it as a notebook (percent format).

# %%
from swarmnet import SwarmConfig, run
from swarmnet.metrics import overhead_percent, theoretical_time

cfg = SwarmConfig(seed=0)
theo = theoretical_time(cfg.d1, cfg.d2, cfg.vel_leader)
print(f"straight-line time: {theo:.2f} ticks")

# %% [markdown]
# A lone UAV leads itself and flies the straight line. With no jitter it
# stops 5 m short of the destination at tick 179.

# %%
solo = run(SwarmConfig(n=1, deploy_jitter=0.0))
print("solo arrival:", solo.arrival_tick, f"overhead {overhead_percent(solo.arrival_tick, theo):.1f}%")

# %% [markdown]
# With the default separation radius of 100 m every pair of UAVs pushes
# apart on the first tick, so the graph falls apart before a leader settles.

# %%
res = run(cfg, trace_stride=1)
for rec in res.trace[:6]:
    print(rec.tick, "edges:", len(rec.edges), "connected:", rec.connected, "weights:", rec.weights)
print("arrived:", res.arrived, "ticks run:", res.ticks_run, "left region:", res.left_region)

# %% [markdown]
# Shrinking the separation radius to 1 m keeps the flock together.

# %%
tight = run(SwarmConfig(seed=0, sep_radius=1.0))
print("arrival:", tight.arrival_tick, f"overhead {overhead_percent(tight.arrival_tick, theo):.1f}%")
print("leader over time:", sorted(set(x for x in tight.leader_id_timeline if x is not None)))
