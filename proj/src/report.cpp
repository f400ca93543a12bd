namespace ctop {}
