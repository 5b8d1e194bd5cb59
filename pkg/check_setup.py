"""
System Check Script - Verify golay-zcz Setup
Run this script to verify everything is working correctly
"""
import sys
from pathlib import Path
import logging

# Configure logging for check_setup - simple format without timestamp
logging.basicConfig(
    level=logging.INFO,
    format='%(message)s',
    handlers=[logging.StreamHandler(sys.stdout)]
)
logger = logging.getLogger(__name__)

# Add src to path
sys.path.insert(0, str(Path(__file__).parent / "src"))


def print_header(text):
    """Print a formatted header"""
    logger.info("\n" + "=" * 60)
    logger.info(f"  {text}")
    logger.info("=" * 60)


def print_check(name, status, message=""):
    """Print a check result"""
    symbol = "[PASS]" if status else "[FAIL]"
    status_text = "OK" if status else "ERROR"

    logger.info(f"{symbol} {name:40} {status_text}")
    if message:
        logger.info(f"       -> {message}")


def check_python_version():
    """Check Python version"""
    version = sys.version_info
    is_valid = version.major == 3 and version.minor >= 10
    print_check(
        "Python Version (3.10+)",
        is_valid,
        f"Current: {version.major}.{version.minor}.{version.micro}"
    )
    return is_valid


def check_env_file():
    """A .env file is optional; report which settings are in effect"""
    env_path = Path(__file__).parent / ".env"
    print_check(".env File", True, "found" if env_path.exists() else "not found, using defaults")

    from golay_zcz.config import get_settings
    settings = get_settings()
    logger.info(f"    threads={settings.threads} log_level={settings.log_level} "
                f"log_format={settings.log_format} float_eps={settings.float_eps}")
    return True


def check_dependencies():
    """Check if required packages are installed"""
    required_packages = {
        'numpy': 'NumPy',
        'pydantic': 'Pydantic',
        'dotenv': 'Python Dotenv',
        'pythonjsonlogger': 'Python JSON Logger',
        'tqdm': 'tqdm',
    }

    all_installed = True
    for package, name in required_packages.items():
        try:
            __import__(package)
            print_check(f"  {name}", True)
        except ImportError:
            print_check(f"  {name}", False, "REQUIRED - run: pip install -r requirements.txt")
            all_installed = False

    return all_installed


def check_imports():
    """Check if project modules can be imported"""
    modules = {
        'golay_zcz.seqcore': 'Sequence Core',
        'golay_zcz.correlation': 'Correlation Engine',
        'golay_zcz.golay': 'Golay Pairs',
        'golay_zcz.ccc': 'Complete Complementary Codes',
        'golay_zcz.zczset': 'Golay-ZCZ Sets',
        'golay_zcz.search': 'CCC Search',
        'golay_zcz.cli': 'Command Line',
    }

    all_imported = True
    for module, name in modules.items():
        try:
            __import__(module)
            print_check(f"  {name}", True)
        except Exception as e:
            print_check(f"  {name}", False, f"Error: {str(e)[:50]}")
            all_imported = False

    return all_imported


def check_seeds():
    """Load and verify every registry code"""
    try:
        from golay_zcz.seeds import list_seeds, seed_registry
    except Exception as e:
        print_check("Seed Registry", False, str(e))
        return False

    all_verified = True
    for name in list_seeds():
        try:
            m, _, n = seed_registry(name).shape
            print_check(f"  {name}", True, f"({m},{m},{n})")
        except Exception as e:
            print_check(f"  {name}", False, str(e))
            all_verified = False
    return all_verified


def run_quick_test():
    """Build the (2,40,10) pair from the printed length-10 Golay pair"""
    try:
        from golay_zcz.golay import SignQuadruple, build_theorem1_pair, example1_pair, golay_mate
        from golay_zcz.zczset import verify_golay_zcz

        pair = example1_pair()
        p, q = build_theorem1_pair(pair, golay_mate(pair), SignQuadruple(1, 1, 1, -1))
        report = verify_golay_zcz([p, q], 10)
        print_check("(2,40,10) Golay-ZCZ Pair", report.passed, f"Zmin={report.z_min}")
        return report.passed
    except Exception as e:
        print_check("(2,40,10) Golay-ZCZ Pair", False, str(e))
        return False


def main():
    """Main check function"""
    print_header("GOLAY-ZCZ - SYSTEM CHECK")

    results = {}

    print_header("1. System Environment")
    results['python'] = check_python_version()

    print_header("2. Python Dependencies")
    results['deps'] = check_dependencies()

    print_header("3. Configuration")
    results['env'] = results['deps'] and check_env_file()

    print_header("4. Project Modules")
    results['imports'] = check_imports()

    print_header("5. Seed Registry")
    results['seeds'] = check_seeds()

    print_header("6. Functionality Test")
    results['test'] = run_quick_test()

    print_header("SUMMARY")

    total_checks = len(results)
    passed_checks = sum(1 for v in results.values() if v)

    logger.info(f"\nPassed: {passed_checks}/{total_checks} checks")

    if all(results.values()):
        logger.info("\n[SUCCESS] System is ready! You can run:")
        logger.info("  python run_cli.py seeds --list")
        logger.info("  pytest")
        return 0

    logger.error("\n[ERROR] System check failed! Please fix the issues above.")
    logger.info("\nCommon fixes:")
    logger.info("  1. Activate virtual environment: source .venv/bin/activate")
    logger.info("  2. Install dependencies: pip install -r requirements.txt")
    return 1


if __name__ == "__main__":
    try:
        exit_code = main()
        sys.exit(exit_code)
    except KeyboardInterrupt:
        logger.info("\n\nCheck interrupted by user")
        sys.exit(1)
    except Exception as e:
        logger.error(f"\n\n[ERROR] Unexpected error: {e}")
        import traceback
        traceback.print_exc()
        sys.exit(1)
