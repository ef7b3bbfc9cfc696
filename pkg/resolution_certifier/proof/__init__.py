"""Resolution DAGs and their independent checker."""
