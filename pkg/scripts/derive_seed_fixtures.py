"""Regenerate src/domfractal/data/seed_fixtures.json from the oracle."""

import sys

from domfractal.fixtures import derive_seed_fixtures, dump_fixtures, fixture_path

if __name__ == "__main__":
    text = dump_fixtures(derive_seed_fixtures())
    if "--check" in sys.argv:
        sys.exit(0 if fixture_path().read_text() == text else 1)
    fixture_path().write_text(text)
    print(f"wrote {fixture_path()}")
