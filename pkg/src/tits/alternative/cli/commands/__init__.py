"""`tits-alt` subcommands."""
