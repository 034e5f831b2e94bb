use fdtc::report::{cmd_transfer, Options};

fn main() {
    match cmd_transfer("s1", 2, Some(2), None, &Options::default()) {
        Ok(_) => println!("unexpectedly lifted"),
        Err(e) => {
            println!("exit code {}", e.exit_code());
            println!("{}", serde_json::to_string_pretty(&e.to_report()).unwrap());
        }
    }
}
