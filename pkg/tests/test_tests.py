from pathlib import Path

PACKAGE_DIR = Path("figure_eight")
TEST_DIR = Path("tests")
SKIPPED_DIRS = {"__pycache__"}


def module_files(package_dir: Path) -> list[Path]:
    return [
        path
        for path in sorted(package_dir.rglob("*.py"))
        if not path.name.startswith("_")
        and SKIPPED_DIRS.isdisjoint(path.relative_to(package_dir).parts)
    ]


def test_tests():
    # every module has a test file at the same relative location
    if not PACKAGE_DIR.exists():
        raise ValueError("module directory does not exist.")

    modules = module_files(PACKAGE_DIR)
    assert len(modules) > 0
    missing = [
        str(path)
        for path in modules
        if not (
            TEST_DIR / path.relative_to(PACKAGE_DIR).parent / f"test_{path.name}"
        ).exists()
    ]
    assert missing == [], f"test files missing for {missing}"
    return
