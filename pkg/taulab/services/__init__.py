from taulab.services.compute import compute, parse_pipeline
from taulab.services.corpus import corpus_algebras, corpus_files, kupisch_series, parse_corpus_spec, write_corpus
from taulab.services.info import algebra_info

__all__ = [
    "algebra_info",
    "compute",
    "corpus_algebras",
    "corpus_files",
    "kupisch_series",
    "parse_corpus_spec",
    "parse_pipeline",
    "write_corpus",
]
