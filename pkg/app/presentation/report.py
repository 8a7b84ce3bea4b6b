from ..services.check_service import CheckReport


def render_check_report(report: CheckReport) -> str:
    """把检查结果渲染成终端可读的纯文本"""
    lines: list[str] = []
    lines.append("检查报告")
    lines.append("")

    for suite in report.suites:
        status = "PASS" if suite.passed else "FAIL"
        lines.append(f"[{status}] {suite.name}  residual={suite.residual:.3e}")
        for item in suite.details:
            if "lattice" in item:
                lattice = item["lattice"]
                lines.append(
                    f"   - {item['encoding']} n={lattice['effective']} "
                    f"edges={len(lattice['edges'])}: {item['residual']:.3e}"
                )
            elif "check" in item:
                lines.append(f"   - {item['check']}: {item['value']:.3e}")
            elif "rows" in item:
                worst = min(row["fidelity"] for row in item["rows"])
                lines.append(f"   - μ={item['mu']:.4f} ν={item['nu']:.4f}: min fidelity {worst:.12f}")
        for item in suite.expected_fail:
            verdict = "expected-fail" if item["detected"] else "NOT DETECTED"
            lines.append(f"   - {item['check']}: infidelity {item['infidelity']:.3e} ({verdict})")
        lines.append("")

    lines.append("全部通过" if report.passed else "存在失败的检查")
    return "\n".join(lines)
