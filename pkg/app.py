import sys

from user_interface import CommandLine


def main():
    cli = CommandLine()
    sys.exit(cli.run())


if __name__ == '__main__':
    main()
