"""Executable low-degree excision and pro-excision computations."""
