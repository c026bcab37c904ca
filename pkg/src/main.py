import sys

from classes.Cli import Cli


def main():
    sys.exit(Cli().run(sys.argv[1:]))


if __name__ == "__main__":
    main()
