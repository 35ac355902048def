"""Binary matroid workbench: minors, splitters and strong splitter chains."""
