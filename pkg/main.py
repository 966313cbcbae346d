"""cheeger launcher: python main.py <command> ..."""
import sys
from pathlib import Path

# src/ holds the flat packages (graphs, spectral, quantum, ...)
sys.path.insert(0, str(Path(__file__).parent / "src"))

if __name__ == "__main__":
    from main import main as cli_main

    sys.exit(cli_main())
