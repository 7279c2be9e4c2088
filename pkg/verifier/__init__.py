from verifier.orchestrator import check_all, run_corpus

__all__ = ["check_all", "run_corpus"]
