"""Workflow layer: each module wires the core engines into one
self-verifying computation with structured results."""
