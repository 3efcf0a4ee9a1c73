fn main() {
    spinnet::cli::main()
}
