"""Tests for hyperdepth."""
