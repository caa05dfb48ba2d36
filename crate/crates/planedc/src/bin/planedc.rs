fn main() {
    println!("planedc");
}
