# Test suite for dyadicforms
