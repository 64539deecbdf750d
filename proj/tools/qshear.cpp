// Placeholder CLI; filled in once the library modules are complete.
int main() { return 0; }
