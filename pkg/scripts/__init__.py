"""Scripts package for auxiliary CLI tools (acceptance runs, golden files)."""
