namespace asdc {}
