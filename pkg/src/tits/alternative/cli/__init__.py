"""Command-line interface for the toolkit (`tits-alt`)."""
