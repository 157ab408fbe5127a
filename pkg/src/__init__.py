"""q-Whittaker toolkit."""
