"""The refutation builder: selection strategies, percolation, grafting."""
