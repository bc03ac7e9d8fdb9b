"""Demo and benchmark scripts."""
