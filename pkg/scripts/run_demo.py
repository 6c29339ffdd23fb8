#!/usr/bin/env python3
"""Run the end-to-end demo and pretty-print the JSON document."""

import json
import sys

from symbalg.cli import demo_report


def main():
    bound = int(sys.argv[1]) if len(sys.argv) > 1 else 50
    print(json.dumps(demo_report(bound), sort_keys=True, indent=2))


if __name__ == "__main__":
    main()
