"""Run every check over a small corpus, in parallel, and summarise."""

from partialcube.sweep import deletion_corpus, downset_corpus, median_corpus, named_corpus, run_sweep

if __name__ == "__main__":
    corpus = (downset_corpus(4) + deletion_corpus(4, 50)
              + median_corpus(["trees", "grids", "hypercubes"], 16) + named_corpus())
    summary = run_sweep(corpus, workers=2, gplus_vertices=16)
    print(f"{summary['graphs']} graphs, {summary['failures']} failures")
    print("counts:", summary["counts"])
