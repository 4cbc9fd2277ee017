"""Cell models of the joint space and of the NN aspect."""
