from taulab.schemas.report import Failure, VerifyResult


def format_result(suite: str, algebra_label: str, raw_result: dict) -> VerifyResult:
    status_bool = raw_result.get("status", False)
    if status_bool is True:
        status = "passed"
    elif status_bool is False:
        status = "failed"
    else:
        status = "error"
    return VerifyResult(
        suite=suite,
        algebra=algebra_label,
        status=status,
        checked=raw_result.get("checked", 0),
        failures=[Failure(**f) for f in raw_result.get("failures", [])],
        message=raw_result.get("message"),
        error=raw_result.get("error"),
    )
