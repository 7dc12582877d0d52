"""Examples for hyperdepth usage."""
