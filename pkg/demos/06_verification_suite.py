# %% [markdown]
# # Seeded verification corpus
#
# The suite builds random codes, inflated and virtualized variants, and runs
# every consistency check.  The same seed gives the same corpus.

# %%
from doodlekit.suite import kishino_checks, make_corpus, run_checks

corpus = make_corpus(seed=3, count=20, max_crossings=5)
print(len(corpus), "codes")
report = run_checks([e.code for e in corpus], seed=3)
print(report.format_human())

# %%
for name, ok, detail in kishino_checks():
    print(f"{name:26} {'PASS' if ok else 'FAIL'} {detail}")
