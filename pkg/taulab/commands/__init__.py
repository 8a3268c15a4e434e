from taulab.commands import classify, compute, corpus, info, verify

COMMANDS = (info, compute, classify, verify, corpus)

__all__ = ["COMMANDS"]
