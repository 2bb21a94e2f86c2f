# Test helper utilities for dyadicforms
