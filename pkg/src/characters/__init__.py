"""q-Whittaker and related characters."""
