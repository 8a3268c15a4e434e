from taulab.schemas.report import VerifyResult


class SuiteTally:
    def __init__(self):
        self.passed = 0
        self.failed = 0
        self.errors = 0
        self.checked = 0

    def add(self, result: VerifyResult):
        self.checked += result.checked
        if result.status == "passed":
            self.passed += 1
        elif result.status == "failed":
            self.failed += 1
        else:
            self.errors += 1

    def summary(self):
        return {
            "passed": self.passed,
            "failed": self.failed,
            "errors": self.errors,
            "checked": self.checked,
            "total": self.passed + self.failed + self.errors,
        }
